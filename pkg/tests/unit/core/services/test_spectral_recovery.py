import numpy as np
import pytest

from rotation_sync.core.domain.entities.absolute_rotations import AbsoluteRotations
from rotation_sync.core.domain.entities.view_graph import SyntheticSpec
from rotation_sync.core.domain.errors import (
    DimensionMismatchError,
    InvalidRotationError,
    SpectralGapError,
)
from rotation_sync.core.services.block_matrix import assemble, ground_truth_matrix
from rotation_sync.core.services.evaluation import angular_error_report
from rotation_sync.core.services.spectral_recovery import recover, spectral_baseline
from rotation_sync.core.services.view_graph_generator import generate


class TestRecover:
    @pytest.mark.parametrize("n", [2, 5, 12])
    def test_exact_rank_three_matrix(self, random_rotations, n):
        """Test that X·Xᵀ gives back X up to gauge."""
        # Arrange
        truth = random_rotations(n)

        # Act
        estimate = recover(ground_truth_matrix(truth), n)

        # Assert
        assert angular_error_report(estimate, truth).max < 1e-6

    def test_gauge_is_fixed_to_first_node(self, random_rotations):
        """Test that the first rotation is exactly the identity."""
        # Arrange
        truth = random_rotations(6)

        # Act
        estimate = recover(ground_truth_matrix(truth), 6)

        # Assert
        assert np.array_equal(estimate[0].matrix, np.eye(3))
        expected = truth[1].matrix @ truth[0].matrix.T
        assert np.allclose(estimate[1].matrix, expected, atol=1e-8)

    def test_single_node(self):
        """Test that one node recovers the identity."""
        # Act
        estimate = recover(np.eye(3), 1)

        # Assert
        assert len(estimate) == 1
        assert np.array_equal(estimate[0].matrix, np.eye(3))

    def test_asymmetric_input_is_symmetrized(self, random_rotations):
        """Test that an antisymmetric perturbation does not change the result."""
        # Arrange
        truth = random_rotations(4)
        z = ground_truth_matrix(truth)
        skew = np.triu(np.ones_like(z), 1)
        skew = skew - skew.T

        # Act
        estimate = recover(z + skew, 4)

        # Assert
        assert angular_error_report(estimate, truth).max < 1e-6

    def test_small_perturbation(self, random_rotations, rng):
        """Test that a 1e-6 symmetric perturbation moves the result by far less than 1e-3 rad."""
        # Arrange
        truth = random_rotations(10)
        noise = rng.normal(size=(30, 30))
        w = ground_truth_matrix(truth) + 1e-6 * (noise + noise.T)

        # Act
        estimate = recover(w, 10)

        # Assert
        assert angular_error_report(estimate, truth).max < np.degrees(1e-3)

    def test_no_dominant_triple(self):
        """Test that a matrix without separated leading eigenvalues is rejected."""
        # Act & Assert
        with pytest.raises(SpectralGapError):
            recover(np.eye(12), 4)

    def test_zero_matrix(self):
        """Test that the zero matrix has no rank-3 signal."""
        # Act & Assert
        with pytest.raises(SpectralGapError):
            recover(np.zeros((9, 9)), 3)

    def test_wrong_shape(self):
        """Test that a matrix not sized 3n x 3n is rejected."""
        # Act & Assert
        with pytest.raises(DimensionMismatchError):
            recover(np.eye(9), 4)

    def test_non_finite_entries(self):
        """Test that NaN entries are rejected before the eigendecomposition."""
        # Arrange
        w = np.eye(6)
        w[0, 1] = np.nan

        # Act & Assert
        with pytest.raises(InvalidRotationError):
            recover(w, 2)


class TestSpectralBaseline:
    def test_noiseless_incomplete_graph_is_exact(self, noiseless_graph):
        """Test that missing blocks as zeros still recover a noiseless connected graph."""
        # Act
        estimate = spectral_baseline(assemble(noiseless_graph))

        # Assert
        report = angular_error_report(estimate, AbsoluteRotations(noiseless_graph.ground_truth))
        assert report.max < 1e-6

    def test_noisy_graph_gives_rotations(self, noisy_graph):
        """Test that corrupted measurements still yield one rotation per node."""
        # Act
        estimate = spectral_baseline(assemble(noisy_graph))

        # Assert
        assert len(estimate) == noisy_graph.n
        assert np.array_equal(estimate[0].matrix, np.eye(3))

    def test_deterministic(self):
        """Test that repeated recoveries are bit-identical."""
        # Arrange
        graph = generate(SyntheticSpec(n=15, edge_prob=0.5, seed=11))
        obs = assemble(graph)

        # Act
        first = spectral_baseline(obs).as_array()
        second = spectral_baseline(obs).as_array()

        # Assert
        assert np.array_equal(first, second)
