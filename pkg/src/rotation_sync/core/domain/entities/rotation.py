"""
Rotation entities: proper 3x3 rotation matrices and angle-axis pairs.
"""
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from rotation_sync.core.domain.config import AXIS_NORM_TOLERANCE, ROTATION_TOLERANCE
from rotation_sync.core.domain.errors import InvalidRotationError


class SamplingMode(str, Enum):
    """How random rotations are drawn."""

    EULER_UNIFORM = "euler-uniform"
    HAAR_UNIFORM = "haar-uniform"


def orthogonality_residual(matrix: np.ndarray) -> float:
    """Frobenius norm of M·Mᵀ − I."""
    return float(np.linalg.norm(matrix @ matrix.T - np.eye(3)))


def is_rotation(matrix: np.ndarray, tolerance: float = ROTATION_TOLERANCE) -> bool:
    """
    Check whether a 3x3 array is a proper rotation within a tolerance.

    Args:
        matrix: Candidate matrix
        tolerance: Allowed orthogonality residual and determinant deviation

    Returns:
        bool: True if the matrix is in SO(3) within the tolerance
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (3, 3) or not np.all(np.isfinite(matrix)):
        return False
    return (
        orthogonality_residual(matrix) <= tolerance
        and abs(np.linalg.det(matrix) - 1.0) <= tolerance
    )


@dataclass(frozen=True, eq=False)
class Rotation:
    """
    A proper rotation of 3D space, stored as a read-only 3x3 matrix.

    Construction validates orthogonality and unit determinant, so every
    Rotation instance in the system is a member of SO(3).
    """

    matrix: np.ndarray

    def __post_init__(self) -> None:
        matrix = np.array(self.matrix, dtype=float)
        if matrix.shape != (3, 3):
            raise InvalidRotationError(f"Expected a 3x3 matrix, got shape {matrix.shape}")
        if not is_rotation(matrix):
            raise InvalidRotationError(
                f"Matrix is not a rotation (orthogonality residual "
                f"{orthogonality_residual(matrix):.3e}, det {np.linalg.det(matrix):.12f})"
            )
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def identity(cls) -> "Rotation":
        """Return the identity rotation."""
        return cls(np.eye(3))

    @property
    def T(self) -> "Rotation":
        """The inverse rotation."""
        return Rotation(self.matrix.T)

    def __matmul__(self, other: "Rotation") -> "Rotation":
        if not isinstance(other, Rotation):
            return NotImplemented
        return Rotation(self.matrix @ other.matrix)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Rotation):
            return NotImplemented
        return bool(np.array_equal(self.matrix, other.matrix))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(f"{v:.6f}" for v in row) for row in self.matrix)
        return f"Rotation([{rows}])"


@dataclass(frozen=True)
class AngleAxis:
    """A rotation given as a unit axis and an angle in [0, π] radians."""

    axis: tuple[float, float, float]
    angle: float

    def __post_init__(self) -> None:
        axis = tuple(float(v) for v in self.axis)
        if len(axis) != 3:
            raise InvalidRotationError(f"Axis must have three components, got {len(axis)}")
        norm = math.sqrt(sum(v * v for v in axis))
        if abs(norm - 1.0) > AXIS_NORM_TOLERANCE:
            raise InvalidRotationError(f"Axis must be a unit vector, norm is {norm!r}")
        if not 0.0 <= self.angle <= math.pi:
            raise InvalidRotationError(f"Angle must lie in [0, pi], got {self.angle!r}")
        object.__setattr__(self, "axis", axis)
        object.__setattr__(self, "angle", float(self.angle))
