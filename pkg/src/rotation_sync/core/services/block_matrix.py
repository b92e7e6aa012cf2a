"""
Assembly of the observed 3n x 3n block matrix and masked completion residuals.
"""
import math

import numpy as np

from rotation_sync.core.domain.entities.absolute_rotations import AbsoluteRotations
from rotation_sync.core.domain.entities.block_matrix import ObservedBlockMatrix
from rotation_sync.core.domain.entities.factorization import LossKind
from rotation_sync.core.domain.entities.view_graph import ViewGraph
from rotation_sync.core.domain.errors import DimensionMismatchError


def assemble(graph: ViewGraph) -> ObservedBlockMatrix:
    """
    Lay out the measurements of a view graph as a partial block matrix.

    Diagonal blocks are observed identities, block (i, j) holds R̂_ij and
    block (j, i) its transpose; all other blocks are zero and unobserved, so
    |Ω| = 9·(n + 2|E|).
    """
    n = graph.n
    zhat = np.zeros((n, 3, n, 3))
    mask = np.zeros((n, 3, n, 3))

    diagonal = np.arange(n)
    zhat[diagonal, :, diagonal, :] = np.eye(3)
    mask[diagonal, :, diagonal, :] = 1.0

    if graph.edges:
        rows = np.array([edge.i for edge in graph.edges])
        cols = np.array([edge.j for edge in graph.edges])
        blocks = np.stack([edge.rotation.matrix for edge in graph.edges])
        zhat[rows, :, cols, :] = blocks
        zhat[cols, :, rows, :] = np.swapaxes(blocks, 1, 2)
        mask[rows, :, cols, :] = 1.0
        mask[cols, :, rows, :] = 1.0

    return ObservedBlockMatrix(
        zhat=zhat.reshape(3 * n, 3 * n),
        mask=mask.reshape(3 * n, 3 * n),
        n=n,
    )


def _check_shape(w: np.ndarray, obs: ObservedBlockMatrix) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    if w.shape != obs.zhat.shape:
        raise DimensionMismatchError(
            f"Candidate matrix has shape {w.shape}, expected {obs.zhat.shape}"
        )
    return w


def completion_residual(w: np.ndarray, obs: ObservedBlockMatrix,
                        norm: LossKind = LossKind.L1) -> float:
    """
    Masked completion objective (1/|Ω|)·‖(w − zhat) ⊙ Ω‖.

    Args:
        w: Candidate 3n x 3n matrix
        obs: Observed block matrix
        norm: ``l1`` for the sum of absolute values, ``l2`` for the squared
            Frobenius norm

    Returns:
        float: The normalized residual

    Raises:
        DimensionMismatchError: If w does not match the observed matrix
    """
    w = _check_shape(w, obs)
    masked = (w - obs.zhat) * obs.mask
    if LossKind(norm) is LossKind.L1:
        total = np.abs(masked).sum()
    else:
        total = np.square(masked).sum()
    return float(total / obs.observed_count)


def ground_truth_matrix(rotations: AbsoluteRotations) -> np.ndarray:
    """The complete relative-rotation matrix Z = X·Xᵀ, which has rank 3."""
    x = rotations.as_block_column()
    return x @ x.T


def heldout_error(w: np.ndarray, z_true: np.ndarray, obs: ObservedBlockMatrix) -> float:
    """
    Mean absolute deviation from the true Z over the unobserved entries.

    This is the generalization error of the completion; it is NaN when every
    entry is observed.
    """
    w = _check_shape(w, obs)
    unobserved = obs.mask == 0.0
    count = int(unobserved.sum())
    if count == 0:
        return math.nan
    return float(np.abs(w - z_true)[unobserved].sum() / count)
