import numpy as np
import pytest

from rotation_sync.core.domain.entities.absolute_rotations import AbsoluteRotations
from rotation_sync.core.domain.entities.rotation import Rotation
from rotation_sync.core.domain.entities.view_graph import Edge, ViewGraph
from rotation_sync.core.domain.errors import DisconnectedGraphError
from rotation_sync.core.services.evaluation import angular_error_report
from rotation_sync.core.services.so3 import random_rotation
from rotation_sync.core.services.spanning_tree import spanning_tree_solve


class TestSpanningTreeSolve:
    def test_noiseless_graph_is_exact(self, noiseless_graph):
        """Test that propagation recovers a noiseless instance up to gauge."""
        # Act
        estimate = spanning_tree_solve(noiseless_graph)

        # Assert
        report = angular_error_report(estimate, AbsoluteRotations(noiseless_graph.ground_truth))
        assert report.max < 1e-6

    def test_root_is_identity(self, noisy_graph):
        """Test that the first node is fixed to the identity."""
        # Act
        estimate = spanning_tree_solve(noisy_graph)

        # Assert
        assert np.array_equal(estimate[0].matrix, np.eye(3))
        assert len(estimate) == noisy_graph.n

    def test_deterministic(self, noisy_graph):
        """Test that repeated solves give identical rotations."""
        # Assert
        assert spanning_tree_solve(noisy_graph) == spanning_tree_solve(noisy_graph)

    def test_disconnected_graph(self):
        """Test that an isolated node is reported."""
        # Arrange
        graph = ViewGraph(n=3, edges=(Edge(0, 1, Rotation.identity()),))

        # Act & Assert
        with pytest.raises(DisconnectedGraphError):
            spanning_tree_solve(graph)

    def test_all_identity_edges(self):
        """Test that identity measurements put every node at the identity."""
        # Arrange
        graph = ViewGraph(n=4, edges=tuple(
            Edge(i, j, Rotation.identity()) for i, j in [(0, 1), (1, 2), (0, 3), (2, 3)]
        ))

        # Act
        estimate = spanning_tree_solve(graph)

        # Assert
        assert all(np.allclose(r.matrix, np.eye(3), atol=1e-15) for r in estimate)

    def test_chain_composition(self, rng):
        """Test the chain 1-2-3 with measurements A and B gives I, Aᵀ and BᵀAᵀ."""
        # Arrange
        a, b = random_rotation(rng), random_rotation(rng)
        graph = ViewGraph(n=3, edges=(Edge(0, 1, a), Edge(1, 2, b)))

        # Act
        estimate = spanning_tree_solve(graph)

        # Assert
        assert np.allclose(estimate[0].matrix, np.eye(3), atol=1e-15)
        assert np.allclose(estimate[1].matrix, a.matrix.T, atol=1e-12)
        assert np.allclose(estimate[2].matrix, b.matrix.T @ a.matrix.T, atol=1e-12)
