"""
Spectral recovery of absolute rotations from a (completed) block matrix.
"""
import logging
import math

import numpy as np
from scipy.linalg import eigh

from rotation_sync.core.domain.config import SPECTRAL_GAP_RATIO
from rotation_sync.core.domain.entities.absolute_rotations import AbsoluteRotations
from rotation_sync.core.domain.entities.block_matrix import ObservedBlockMatrix
from rotation_sync.core.domain.errors import (
    DimensionMismatchError,
    InvalidRotationError,
    SpectralGapError,
)
from rotation_sync.core.services.so3 import project_blocks

logger = logging.getLogger(__name__)


def _top_eigenpairs(symmetric: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Largest three or four eigenpairs, eigenvalues in ascending order."""
    size = symmetric.shape[0]
    count = min(4, size)
    return eigh(symmetric, subset_by_index=[size - count, size - 1])


def _check_gap(eigenvalues: np.ndarray) -> None:
    lambda1 = float(eigenvalues[-1])
    lambda3 = float(eigenvalues[-3])
    if lambda3 <= SPECTRAL_GAP_RATIO * lambda1 or lambda1 <= 0:
        raise SpectralGapError(
            f"No rank-3 signal: third eigenvalue {lambda3:.3e}, largest {lambda1:.3e}"
        )
    if len(eigenvalues) > 3:
        lambda4 = float(eigenvalues[-4])
        if lambda3 - lambda4 <= SPECTRAL_GAP_RATIO * abs(lambda1):
            raise SpectralGapError(
                f"Third and fourth eigenvalues are not separated ({lambda3:.6e} vs {lambda4:.6e})"
            )


def recover(w: np.ndarray, n: int) -> AbsoluteRotations:
    """
    Extract absolute rotations from the dominant eigenvectors of w.

    w is symmetrized, its three leading eigenvectors are stacked into a
    3n x 3 matrix scaled by √n, and each 3x3 block is projected onto SO(3).
    A reflected eigenbasis (negative total block determinant) has one column
    negated first. The result is gauge-fixed so that the first rotation is
    exactly the identity.

    Args:
        w: A 3n x 3n matrix close to X·Xᵀ
        n: Number of nodes

    Returns:
        AbsoluteRotations: n rotations with R_1 = I

    Raises:
        SpectralGapError: If the symmetric part has no separated dominant triple
        DegenerateProjectionError: If a block has no unique nearest rotation
    """
    w = np.asarray(w, dtype=float)
    if w.shape != (3 * n, 3 * n):
        raise DimensionMismatchError(f"Expected a {3 * n}x{3 * n} matrix, got {w.shape}")
    if not np.all(np.isfinite(w)):
        raise InvalidRotationError("Cannot recover rotations from a matrix with non-finite entries")

    eigenvalues, eigenvectors = _top_eigenpairs((w + w.T) / 2.0)
    _check_gap(eigenvalues)
    logger.debug(f"Leading eigenvalues {eigenvalues[::-1]}")

    x = math.sqrt(n) * eigenvectors[:, -3:]
    blocks = x.reshape(n, 3, 3)
    if np.linalg.det(blocks).sum() < 0:
        blocks = blocks * np.array([-1.0, 1.0, 1.0])

    rotations = project_blocks(blocks)
    gauged = rotations @ rotations[0].T
    gauged[0] = np.eye(3)
    return AbsoluteRotations.from_matrices(gauged)


def spectral_baseline(obs: ObservedBlockMatrix) -> AbsoluteRotations:
    """
    The classical spectral method: recover directly from the observed matrix.

    Missing blocks enter as zeros.
    """
    return recover(obs.zhat, obs.n)
