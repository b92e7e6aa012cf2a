"""
Data Transfer Objects for solving and evaluating view graphs.
"""
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field

from rotation_sync.core.domain.config import (
    DEFAULT_DEPTH,
    DEFAULT_INIT_STD,
    DEFAULT_LEARNING_RATE,
    DEFAULT_LOSS,
    DEFAULT_MAX_ITERS,
    DEFAULT_MOMENTUM,
    DEFAULT_PLATEAU_REL_TOL,
    DEFAULT_PLATEAU_WINDOW,
)
from rotation_sync.core.domain.entities.factorization import LossKind, SolverConfig
from rotation_sync.core.domain.entities.synchronization import SyncMethod


class SolverSettingsDTO(BaseModel):
    """DTO for deep matrix factorization hyper-parameters."""
    depth: int = Field(default=DEFAULT_DEPTH, ge=2)
    lr: float = Field(default=DEFAULT_LEARNING_RATE, gt=0.0)
    momentum: float = Field(default=DEFAULT_MOMENTUM, ge=0.0, lt=1.0)
    init_std: float = Field(default=DEFAULT_INIT_STD, gt=0.0)
    max_iters: int = Field(default=DEFAULT_MAX_ITERS, ge=0)
    plateau_window: int = Field(default=DEFAULT_PLATEAU_WINDOW, ge=1)
    plateau_rel_tol: float = Field(default=DEFAULT_PLATEAU_REL_TOL, gt=0.0)
    loss: LossKind = LossKind(DEFAULT_LOSS)
    seed: int = Field(default=0, ge=0)

    def to_config(self, **overrides) -> SolverConfig:
        """Build the domain SolverConfig, optionally overriding fields by their domain name."""
        values = {
            "depth": self.depth,
            "learning_rate": self.lr,
            "momentum": self.momentum,
            "init_std": self.init_std,
            "max_iters": self.max_iters,
            "plateau_window": self.plateau_window,
            "plateau_rel_tol": self.plateau_rel_tol,
            "loss": self.loss,
            "seed": self.seed,
        }
        values.update(overrides)
        return SolverConfig(**values)


class SolveRequestDTO(BaseModel):
    """DTO for a solve request on a stored view graph."""
    input_path: Path
    out_path: Path
    method: SyncMethod = SyncMethod.DMF
    solver: SolverSettingsDTO = Field(default_factory=SolverSettingsDTO)
    ground_truth_path: Optional[Path] = None
    report_path: Optional[Path] = None
    append_report: bool = False
    record_wall_time: bool = False


class SolveResponseDTO(BaseModel):
    """DTO for the outcome of a solve."""
    output_path: Path
    method: SyncMethod
    n: int
    n_edges: int
    iterations: Optional[int] = None
    stop_reason: Optional[str] = None
    final_loss: Optional[float] = None
    mean_err_deg: Optional[float] = None
    median_err_deg: Optional[float] = None
    report_path: Optional[Path] = None

    def summary(self) -> str:
        """One-line human-readable summary."""
        parts = [f"wrote {self.n} rotations to {self.output_path} ({self.method.value})"]
        if self.iterations is not None:
            parts.append(f"{self.iterations} iterations, {self.stop_reason}, loss {self.final_loss:.6e}")
        if self.mean_err_deg is not None:
            parts.append(f"mean {self.mean_err_deg:.4f} deg, median {self.median_err_deg:.4f} deg")
        return "; ".join(parts)


class EvaluateRequestDTO(BaseModel):
    """DTO for comparing stored rotations against a ground truth."""
    estimate_path: Path
    ground_truth_path: Path


class EvaluateResponseDTO(BaseModel):
    """DTO for gauge-aligned error statistics in degrees."""
    n: int
    mean_err_deg: float
    median_err_deg: float
    max_err_deg: float

    def summary(self) -> str:
        """One-line human-readable summary."""
        return (
            f"n={self.n}: mean {self.mean_err_deg:.4f} deg, median {self.median_err_deg:.4f} deg, "
            f"max {self.max_err_deg:.4f} deg"
        )
