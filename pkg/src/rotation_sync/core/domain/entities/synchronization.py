"""
Synchronization result entity shared by every solver.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from rotation_sync.core.domain.entities.absolute_rotations import AbsoluteRotations
from rotation_sync.core.domain.entities.factorization import SolveReport


class SyncMethod(str, Enum):
    """Available synchronization methods."""

    DMF = "dmf"
    SPECTRAL = "spectral"
    SPANNING_TREE = "spanning-tree"


@dataclass(frozen=True)
class SynchronizationResult:
    """
    Absolute rotations estimated by one method.

    ``solve_report`` is only set by the deep matrix factorization method.
    """

    method: SyncMethod
    rotations: AbsoluteRotations
    solve_report: Optional[SolveReport] = None
