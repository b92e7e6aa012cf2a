"""
Gauge-aligned angular error against ground-truth rotations.
"""
import numpy as np

from rotation_sync.core.domain.entities.absolute_rotations import AbsoluteRotations
from rotation_sync.core.domain.entities.error_report import ErrorReport
from rotation_sync.core.domain.entities.rotation import Rotation
from rotation_sync.core.domain.errors import DimensionMismatchError
from rotation_sync.core.services.so3 import geodesic_distances, project_to_so3


def _check_lengths(est: AbsoluteRotations, gt: AbsoluteRotations) -> None:
    if len(est) != len(gt) or len(est) == 0:
        raise DimensionMismatchError(
            f"Cannot compare {len(est)} estimated rotations with {len(gt)} ground-truth rotations"
        )


def align(est: AbsoluteRotations, gt: AbsoluteRotations) -> Rotation:
    """
    Single rotation Q minimizing Σ_i ‖est_i·Q − gt_i‖_F².

    The closed form is the projection of Σ_i est_iᵀ·gt_i onto SO(3).

    Raises:
        DimensionMismatchError: If the lists differ in length or are empty
        DegenerateProjectionError: If the accumulated matrix is rank-deficient
    """
    _check_lengths(est, gt)
    accumulated = np.einsum("kji,kjl->il", est.as_array(), gt.as_array())
    return project_to_so3(accumulated)


def angular_error_report(est: AbsoluteRotations, gt: AbsoluteRotations) -> ErrorReport:
    """
    Per-node geodesic errors in degrees after aligning est to gt.

    Args:
        est: Estimated rotations
        gt: Ground-truth rotations

    Returns:
        ErrorReport: Per-node errors with mean, median and the alignment used
    """
    alignment = align(est, gt)
    aligned = est.as_array() @ alignment.matrix
    errors = np.degrees(geodesic_distances(aligned, gt.as_array()))
    return ErrorReport.from_errors(errors, alignment)
