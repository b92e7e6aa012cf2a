"""
Deep matrix factorization entities: solver configuration, factor stack and solve report.
"""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from rotation_sync.core.domain.config import (
    DEFAULT_DEPTH,
    DEFAULT_INIT_STD,
    DEFAULT_LEARNING_RATE,
    DEFAULT_LOSS,
    DEFAULT_MAX_ITERS,
    DEFAULT_MOMENTUM,
    DEFAULT_PLATEAU_ARM_RATIO,
    DEFAULT_PLATEAU_REL_TOL,
    DEFAULT_PLATEAU_WINDOW,
)
from rotation_sync.core.domain.errors import DimensionMismatchError, InvalidConfigurationError


class LossKind(str, Enum):
    """Entry-wise norm of the masked completion residual."""

    L1 = "l1"
    L2 = "l2"


class StopReason(str, Enum):
    """Why gradient descent stopped."""

    PLATEAU = "plateau"
    MAX_ITERS = "max_iters"


@dataclass(frozen=True)
class SolverConfig:
    """
    Hyper-parameters of the deep matrix factorization solver.

    The plateau test compares the mean loss of consecutive blocks of
    ``plateau_window`` iterations and is only armed once the loss has dropped
    below ``plateau_arm_ratio`` times its initial value.
    """

    depth: int = DEFAULT_DEPTH
    learning_rate: float = DEFAULT_LEARNING_RATE
    momentum: float = DEFAULT_MOMENTUM
    init_std: float = DEFAULT_INIT_STD
    max_iters: int = DEFAULT_MAX_ITERS
    plateau_window: int = DEFAULT_PLATEAU_WINDOW
    plateau_rel_tol: float = DEFAULT_PLATEAU_REL_TOL
    loss: LossKind = LossKind(DEFAULT_LOSS)
    seed: int = 0
    plateau_arm_ratio: float = DEFAULT_PLATEAU_ARM_RATIO

    def __post_init__(self) -> None:
        if self.depth < 2:
            raise InvalidConfigurationError(f"depth must be at least 2, got {self.depth}")
        if not (math.isfinite(self.learning_rate) and self.learning_rate > 0):
            raise InvalidConfigurationError(f"learning_rate must be positive, got {self.learning_rate}")
        if not 0.0 <= self.momentum < 1.0:
            raise InvalidConfigurationError(f"momentum must lie in [0, 1), got {self.momentum}")
        if not (math.isfinite(self.init_std) and self.init_std > 0):
            raise InvalidConfigurationError(f"init_std must be positive, got {self.init_std}")
        if self.max_iters < 0:
            raise InvalidConfigurationError(f"max_iters must be non-negative, got {self.max_iters}")
        if self.plateau_window < 1:
            raise InvalidConfigurationError(
                f"plateau_window must be at least 1, got {self.plateau_window}"
            )
        if not self.plateau_rel_tol > 0:
            raise InvalidConfigurationError(
                f"plateau_rel_tol must be positive, got {self.plateau_rel_tol}"
            )
        if not 0.0 < self.plateau_arm_ratio <= 1.0:
            raise InvalidConfigurationError(
                f"plateau_arm_ratio must lie in (0, 1], got {self.plateau_arm_ratio}"
            )
        if self.seed < 0:
            raise InvalidConfigurationError(f"seed must be non-negative, got {self.seed}")
        object.__setattr__(self, "loss", LossKind(self.loss))


@dataclass(frozen=True, eq=False)
class FactorStack:
    """
    The d square factors W_1..W_d and their momentum buffers.

    ``factors[0]`` is W_1, the factor applied first; the end-to-end matrix is
    W_d···W_1.
    """

    factors: tuple[np.ndarray, ...]
    velocity: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        factors = tuple(self.factors)
        velocity = tuple(self.velocity)
        if len(factors) < 2:
            raise InvalidConfigurationError(f"A factor stack needs depth >= 2, got {len(factors)}")
        shape = factors[0].shape
        if len(shape) != 2 or shape[0] != shape[1]:
            raise DimensionMismatchError(f"Factors must be square, got {shape}")
        if any(f.shape != shape for f in factors):
            raise DimensionMismatchError("All factors must share the same shape")
        if len(velocity) != len(factors) or any(v.shape != shape for v in velocity):
            raise DimensionMismatchError("Velocity buffers must match the factors")
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "velocity", velocity)

    @classmethod
    def at_rest(cls, factors: tuple[np.ndarray, ...]) -> "FactorStack":
        """Wrap factors with zero velocity."""
        return cls(factors=tuple(factors), velocity=tuple(np.zeros_like(f) for f in factors))

    @property
    def depth(self) -> int:
        """Number of factors d."""
        return len(self.factors)

    @property
    def size(self) -> int:
        """Side length of every factor."""
        return int(self.factors[0].shape[0])


@dataclass(frozen=True, eq=False)
class SolveReport:
    """
    Outcome and instrumentation of one deep matrix factorization solve.

    ``loss_history[k]`` is the loss of the product before the k-th update;
    ``final_loss`` is the loss of ``completed``.
    """

    completed: np.ndarray
    loss_history: np.ndarray
    singular_values: np.ndarray
    iterations_run: int
    stop_reason: StopReason
    final_loss: float
    config: SolverConfig = field(default_factory=SolverConfig)
    heldout_error: Optional[float] = None

    @property
    def initial_loss(self) -> float:
        """Loss at the random initialization."""
        return float(self.loss_history[0]) if len(self.loss_history) else self.final_loss

    @property
    def singular_value_ratio(self) -> float:
        """σ4/σ3 of the completed matrix, the rank-3 separation."""
        if len(self.singular_values) < 4 or self.singular_values[2] == 0:
            return math.nan
        return float(self.singular_values[3] / self.singular_values[2])
