import math

import numpy as np
import pytest

from rotation_sync.core.domain.entities.rotation import Rotation, SamplingMode
from rotation_sync.core.domain.entities.view_graph import Edge, SyntheticSpec, ViewGraph
from rotation_sync.core.domain.errors import GraphInvariantError, InvalidConfigurationError

IDENTITY = Rotation.identity()
HALF_TURN = Rotation(np.diag([1.0, -1.0, -1.0]))


class TestViewGraph:
    def test_edges_are_sorted(self):
        """Test that edges are kept in (i, j) order whatever the input order."""
        # Act
        graph = ViewGraph(n=3, edges=(Edge(1, 2, IDENTITY), Edge(0, 2, IDENTITY), Edge(0, 1, IDENTITY)))

        # Assert
        assert [(e.i, e.j) for e in graph.edges] == [(0, 1), (0, 2), (1, 2)]

    @pytest.mark.parametrize("edges", [
        (Edge(1, 1, IDENTITY),),
        (Edge(2, 1, IDENTITY),),
        (Edge(0, 3, IDENTITY),),
        (Edge(0, 1, IDENTITY), Edge(0, 1, HALF_TURN)),
    ])
    def test_invariant_violations(self, edges):
        """Test that self-loops, reversed, out-of-range and duplicate edges are rejected."""
        # Act & Assert
        with pytest.raises(GraphInvariantError):
            ViewGraph(n=3, edges=edges)

    def test_ground_truth_length(self):
        """Test that the ground truth must hold one rotation per node."""
        # Act & Assert
        with pytest.raises(GraphInvariantError):
            ViewGraph(n=3, edges=(), ground_truth=(IDENTITY, IDENTITY))

    def test_from_edges_flips_orientation(self):
        """Test that a (j, i) edge is stored as (i, j) with the transposed rotation."""
        # Arrange
        c, s = math.cos(0.4), math.sin(0.4)
        rotation = Rotation(np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]]))

        # Act
        graph = ViewGraph.from_edges(2, [Edge(1, 0, rotation)])

        # Assert
        edge = graph.edges[0]
        assert (edge.i, edge.j) == (0, 1)
        assert np.array_equal(edge.rotation.matrix, rotation.matrix.T)

    def test_statistics(self):
        """Test the edge fraction and redundancy of a path graph."""
        # Arrange
        graph = ViewGraph(n=4, edges=(Edge(0, 1, IDENTITY), Edge(1, 2, IDENTITY), Edge(2, 3, IDENTITY)))

        # Assert
        assert graph.edge_count == 3
        assert graph.edge_fraction == pytest.approx(0.5)
        assert graph.redundancy == pytest.approx(0.75)

    def test_outlier_flag_is_not_compared(self):
        """Test that the outlier bookkeeping flag does not affect equality."""
        # Assert
        assert Edge(0, 1, IDENTITY, is_outlier=True) == Edge(0, 1, IDENTITY, is_outlier=False)


class TestSyntheticSpec:
    def test_defaults(self):
        """Test the benchmark defaults of a synthetic specification."""
        # Act
        spec = SyntheticSpec(n=10, edge_prob=0.5)

        # Assert
        assert spec.outlier_fraction == 0.4
        assert spec.noise_sigma == pytest.approx(math.radians(5.0))
        assert spec.outlier_mode is SamplingMode.HAAR_UNIFORM

    @pytest.mark.parametrize("kwargs", [
        {"n": 1, "edge_prob": 0.5},
        {"n": 5, "edge_prob": 1.5},
        {"n": 5, "edge_prob": 0.5, "outlier_fraction": -0.1},
        {"n": 5, "edge_prob": 0.5, "noise_sigma": -1.0},
        {"n": 5, "edge_prob": 0.5, "noise_sigma": math.inf},
        {"n": 5, "edge_prob": 0.5, "seed": -1},
        {"n": 5, "edge_prob": 0.5, "seed": 2**64},
    ])
    def test_invalid(self, kwargs):
        """Test that out-of-range parameters are rejected."""
        # Act & Assert
        with pytest.raises(InvalidConfigurationError):
            SyntheticSpec(**kwargs)

    def test_unknown_outlier_mode(self):
        """Test that the outlier mode must be a known sampling mode."""
        # Act & Assert
        with pytest.raises(ValueError):
            SyntheticSpec(n=5, edge_prob=0.5, outlier_mode="gaussian")
