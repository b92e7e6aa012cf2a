"""
Rotation representations, sampling, distances and projection onto SO(3).

All functions are pure; random generators are owned by the caller.
"""
import math

import numpy as np
from scipy.spatial.transform import Rotation as ScipyRotation

from rotation_sync.core.domain.config import DEGENERATE_SINGULAR_TOLERANCE
from rotation_sync.core.domain.entities.rotation import AngleAxis, Rotation, SamplingMode
from rotation_sync.core.domain.errors import DegenerateProjectionError, InvalidRotationError


def from_euler(yaw: float, pitch: float, roll: float) -> Rotation:
    """
    Build a rotation from intrinsic Z-Y-X Euler angles in radians.

    The result is Rz(yaw)·Ry(pitch)·Rx(roll).
    """
    return Rotation(ScipyRotation.from_euler("ZYX", [yaw, pitch, roll]).as_matrix())


def from_angle_axis(angle_axis: AngleAxis) -> Rotation:
    """Rodrigues' formula; a zero angle gives the identity."""
    rotvec = np.asarray(angle_axis.axis) * angle_axis.angle
    return Rotation(ScipyRotation.from_rotvec(rotvec).as_matrix())


def to_angle_axis(rotation: Rotation) -> AngleAxis:
    """Extract the unit axis and the angle in [0, π] of a rotation."""
    rotvec = ScipyRotation.from_matrix(rotation.matrix).as_rotvec()
    angle = float(np.linalg.norm(rotvec))
    if angle == 0.0:
        return AngleAxis(axis=(1.0, 0.0, 0.0), angle=0.0)
    axis = rotvec / angle
    axis = axis / np.linalg.norm(axis)
    return AngleAxis(axis=tuple(axis), angle=min(angle, math.pi))


def geodesic_distances(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Angles in radians between stacks of rotation matrices of shape (..., 3, 3).

    Equal to arccos((trace(aᵀb) − 1)/2) clamped to [−1, 1]; evaluated through
    atan2 of the sine and cosine parts so that tiny angles keep full precision.
    """
    relative = np.swapaxes(np.asarray(a, dtype=float), -1, -2) @ np.asarray(b, dtype=float)
    cos_part = np.clip((np.trace(relative, axis1=-2, axis2=-1) - 1.0) / 2.0, -1.0, 1.0)
    skew = relative - np.swapaxes(relative, -1, -2)
    sin_part = 0.5 * np.sqrt(
        skew[..., 2, 1] ** 2 + skew[..., 0, 2] ** 2 + skew[..., 1, 0] ** 2
    )
    return np.arctan2(sin_part, cos_part)


def geodesic_distance(a: Rotation, b: Rotation) -> float:
    """
    Angle in radians of the rotation aᵀb, in [0, π].

    Symmetric and invariant to left multiplication of both arguments.
    """
    return float(geodesic_distances(a.matrix, b.matrix))


def project_blocks(blocks: np.ndarray) -> np.ndarray:
    """
    Nearest rotations in Frobenius norm to a stack of 3x3 matrices.

    Args:
        blocks: Array of shape (k, 3, 3)

    Returns:
        np.ndarray: Array of shape (k, 3, 3) of proper rotations

    Raises:
        InvalidRotationError: If an input is not finite
        DegenerateProjectionError: If an input has σ2 = σ3 = 0, where the
            nearest rotation is not unique
    """
    blocks = np.asarray(blocks, dtype=float)
    if blocks.ndim != 3 or blocks.shape[1:] != (3, 3):
        raise InvalidRotationError(f"Expected a stack of 3x3 matrices, got shape {blocks.shape}")
    if not np.all(np.isfinite(blocks)):
        raise InvalidRotationError("Cannot project a matrix with non-finite entries")

    u, s, vt = np.linalg.svd(blocks)
    tolerance = DEGENERATE_SINGULAR_TOLERANCE * np.maximum(1.0, s[:, 0])
    degenerate = (s[:, 1] <= tolerance) & (s[:, 2] <= tolerance)
    if np.any(degenerate):
        index = int(np.flatnonzero(degenerate)[0])
        raise DegenerateProjectionError(
            f"Block {index} has singular values {s[index]}; its nearest rotation is not unique"
        )

    signs = np.sign(np.linalg.det(u @ vt))
    correction = np.ones_like(s)
    correction[:, 2] = signs
    return (u * correction[:, None, :]) @ vt


def project_to_so3(matrix: np.ndarray) -> Rotation:
    """
    Nearest rotation to a 3x3 matrix: U·diag(1, 1, det(UVᵀ))·Vᵀ from its SVD.

    Raises:
        DegenerateProjectionError: If the two smallest singular values vanish
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (3, 3):
        raise InvalidRotationError(f"Expected a 3x3 matrix, got shape {matrix.shape}")
    return Rotation(project_blocks(matrix[None])[0])


def random_rotation(rng: np.random.Generator,
                    mode: SamplingMode = SamplingMode.HAAR_UNIFORM) -> Rotation:
    """
    Draw a random rotation.

    ``euler-uniform`` draws yaw and roll uniformly on [−π, π) and pitch on
    [−π/2, π/2]; ``haar-uniform`` normalizes a Gaussian 4-vector into a
    uniform unit quaternion.
    """
    mode = SamplingMode(mode)
    if mode is SamplingMode.EULER_UNIFORM:
        yaw = rng.uniform(-math.pi, math.pi)
        pitch = rng.uniform(-math.pi / 2, math.pi / 2)
        roll = rng.uniform(-math.pi, math.pi)
        return from_euler(yaw, pitch, roll)

    quaternion = rng.standard_normal(4)
    while np.linalg.norm(quaternion) < 1e-12:
        quaternion = rng.standard_normal(4)
    return Rotation(ScipyRotation.from_quat(quaternion / np.linalg.norm(quaternion)).as_matrix())


def sample_perturbation(sigma: float, rng: np.random.Generator) -> AngleAxis:
    """
    Draw a uniform random axis and an angle |N(0, sigma)| folded into [0, π].

    Folding past π reflects the angle and flips the axis, which describes the
    same rotation.
    """
    if sigma < 0:
        raise InvalidRotationError(f"sigma must be non-negative, got {sigma}")
    axis = rng.standard_normal(3)
    while np.linalg.norm(axis) < 1e-12:
        axis = rng.standard_normal(3)
    axis = axis / np.linalg.norm(axis)

    angle = abs(float(rng.normal(0.0, sigma))) % (2 * math.pi)
    if angle > math.pi:
        angle = 2 * math.pi - angle
        axis = -axis
    return AngleAxis(axis=tuple(axis), angle=angle)


def random_perturbation(sigma: float, rng: np.random.Generator) -> Rotation:
    """A small random rotation about a uniform axis; sigma = 0 gives the identity."""
    return from_angle_axis(sample_perturbation(sigma, rng))
