"""
Absolute rotations entity: one estimated orientation per node.
"""
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from rotation_sync.core.domain.entities.rotation import Rotation


@dataclass(frozen=True)
class AbsoluteRotations:
    """
    The absolute rotations R_1..R_n, i.e. the 3n x 3 matrix X read block-wise.
    """

    rotations: tuple[Rotation, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rotations", tuple(self.rotations))

    @classmethod
    def from_matrices(cls, matrices: Iterable[np.ndarray]) -> "AbsoluteRotations":
        """Build from an iterable of 3x3 arrays, validating each one."""
        return cls(tuple(Rotation(m) for m in matrices))

    def __len__(self) -> int:
        return len(self.rotations)

    def __getitem__(self, index: int) -> Rotation:
        return self.rotations[index]

    def as_array(self) -> np.ndarray:
        """Stack the rotations into an (n, 3, 3) array."""
        return np.stack([r.matrix for r in self.rotations])

    def as_block_column(self) -> np.ndarray:
        """The 3n x 3 matrix X = [R_1; ...; R_n]."""
        return self.as_array().reshape(-1, 3)
