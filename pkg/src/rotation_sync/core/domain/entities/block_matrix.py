"""
Observed block matrix entity: the partial 3n x 3n relative-rotation matrix and its mask.
"""
from dataclasses import dataclass

import numpy as np

from rotation_sync.core.domain.config import MEASUREMENT_TOLERANCE
from rotation_sync.core.domain.entities.rotation import is_rotation
from rotation_sync.core.domain.errors import DimensionMismatchError, GraphInvariantError


@dataclass(frozen=True, eq=False)
class ObservedBlockMatrix:
    """
    The measured relative rotations laid out as a dense 3n x 3n block matrix.

    ``zhat`` holds R̂_ij in block (i, j), its transpose in block (j, i), the
    identity on the diagonal and zeros elsewhere. ``mask`` is 1.0 where a
    block is observed and 0.0 where it is missing.
    """

    zhat: np.ndarray
    mask: np.ndarray
    n: int

    def __post_init__(self) -> None:
        size = 3 * self.n
        zhat = np.array(self.zhat, dtype=float)
        mask = np.array(self.mask, dtype=float)
        if zhat.shape != (size, size) or mask.shape != (size, size):
            raise DimensionMismatchError(
                f"Expected {size}x{size} matrices for n={self.n}, "
                f"got zhat {zhat.shape} and mask {mask.shape}"
            )
        zhat.setflags(write=False)
        mask.setflags(write=False)
        object.__setattr__(self, "zhat", zhat)
        object.__setattr__(self, "mask", mask)

    @property
    def size(self) -> int:
        """Side length 3n of the matrix."""
        return 3 * self.n

    @property
    def observed_count(self) -> int:
        """Number of observed scalar entries |Ω|."""
        return int(self.mask.sum())

    def block(self, i: int, j: int) -> np.ndarray:
        """Return the 3x3 block (i, j) of zhat."""
        return self.zhat[3 * i:3 * i + 3, 3 * j:3 * j + 3]

    def is_observed(self, i: int, j: int) -> bool:
        """Whether block (i, j) carries a measurement."""
        return bool(self.mask[3 * i, 3 * j])

    def verify(self) -> None:
        """
        Check the structural invariants of an observed block matrix.

        Raises:
            GraphInvariantError: If the mask is not block-structured, either
                matrix is not symmetric, a diagonal block is not the identity,
                or an observed block is not a rotation.
        """
        if not np.array_equal(self.mask, self.mask.T):
            raise GraphInvariantError("Mask is not symmetric")
        if not np.array_equal(self.zhat, self.zhat.T):
            raise GraphInvariantError("zhat is not symmetric")
        if not np.all((self.mask == 0.0) | (self.mask == 1.0)):
            raise GraphInvariantError("Mask is not binary")

        blocks = self.mask.reshape(self.n, 3, self.n, 3)
        first = blocks[:, :1, :, :1]
        if not np.all(blocks == first):
            raise GraphInvariantError("Mask is not constant on 3x3 blocks")

        for i in range(self.n):
            if not self.is_observed(i, i) or not np.array_equal(self.block(i, i), np.eye(3)):
                raise GraphInvariantError(f"Diagonal block {i} is not an observed identity")
            for j in range(i + 1, self.n):
                if self.is_observed(i, j):
                    if not is_rotation(self.block(i, j), MEASUREMENT_TOLERANCE):
                        raise GraphInvariantError(f"Block ({i}, {j}) is not a rotation")
                elif np.any(self.block(i, j) != 0.0):
                    raise GraphInvariantError(f"Unobserved block ({i}, {j}) is not zero")
