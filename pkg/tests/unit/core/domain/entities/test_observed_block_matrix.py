import numpy as np
import pytest

from rotation_sync.core.domain.entities.block_matrix import ObservedBlockMatrix
from rotation_sync.core.domain.errors import DimensionMismatchError, GraphInvariantError
from rotation_sync.core.services.block_matrix import assemble


class TestObservedBlockMatrix:
    def test_shape_must_match_node_count(self):
        """Test that zhat and mask must be 3n x 3n."""
        # Act & Assert
        with pytest.raises(DimensionMismatchError):
            ObservedBlockMatrix(zhat=np.eye(6), mask=np.ones((6, 6)), n=3)

    def test_arrays_are_read_only(self, noiseless_graph):
        """Test that the stored arrays cannot be modified."""
        # Arrange
        obs = assemble(noiseless_graph)

        # Act & Assert
        with pytest.raises(ValueError):
            obs.zhat[0, 0] = 2.0

    def test_block_access(self, noiseless_graph):
        """Test block lookup and observation flags against the graph edges."""
        # Arrange
        obs = assemble(noiseless_graph)
        edge = noiseless_graph.edges[0]

        # Assert
        assert obs.is_observed(edge.i, edge.j)
        assert obs.is_observed(edge.j, edge.i)
        assert np.array_equal(obs.block(edge.i, edge.j), edge.rotation.matrix)
        assert np.array_equal(obs.block(edge.j, edge.i), edge.rotation.matrix.T)

    def test_verify_accepts_assembled_matrix(self, noisy_graph):
        """Test that an assembled matrix satisfies every structural invariant."""
        # Arrange
        obs = assemble(noisy_graph)

        # Act & Assert
        obs.verify()

    def test_verify_rejects_asymmetric_matrix(self):
        """Test that an asymmetric zhat is detected."""
        # Arrange
        zhat = np.eye(6)
        zhat[0, 4] = 1.0
        obs = ObservedBlockMatrix(zhat=zhat, mask=np.ones((6, 6)), n=2)

        # Act & Assert
        with pytest.raises(GraphInvariantError):
            obs.verify()

    def test_verify_rejects_non_block_mask(self):
        """Test that a mask that is not constant on 3x3 blocks is detected."""
        # Arrange
        mask = np.ones((6, 6))
        mask[0, 4] = mask[4, 0] = 0.0
        obs = ObservedBlockMatrix(zhat=np.eye(6), mask=mask, n=2)

        # Act & Assert
        with pytest.raises(GraphInvariantError):
            obs.verify()
