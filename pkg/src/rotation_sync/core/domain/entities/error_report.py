"""
Error report entity: gauge-aligned angular errors against a ground truth.
"""
from dataclasses import dataclass

import numpy as np

from rotation_sync.core.domain.entities.rotation import Rotation


@dataclass(frozen=True, eq=False)
class ErrorReport:
    """
    Per-node angular errors in degrees after gauge alignment.

    ``alignment`` is the rotation Q applied on the right of every estimate.
    """

    per_node_errors: np.ndarray
    mean: float
    median: float
    alignment: Rotation

    @classmethod
    def from_errors(cls, errors_deg: np.ndarray, alignment: Rotation) -> "ErrorReport":
        """Summarize per-node errors with their mean and exact median."""
        errors = np.asarray(errors_deg, dtype=float)
        errors.setflags(write=False)
        return cls(
            per_node_errors=errors,
            mean=float(np.mean(errors)),
            median=float(np.median(errors)),
            alignment=alignment,
        )

    @property
    def max(self) -> float:
        """Largest per-node error in degrees."""
        return float(np.max(self.per_node_errors))

    def __str__(self) -> str:
        return (
            f"mean {self.mean:.4f} deg, median {self.median:.4f} deg, "
            f"max {self.max:.4f} deg over {len(self.per_node_errors)} nodes"
        )
