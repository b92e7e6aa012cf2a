"""
Data Transfer Objects for benchmark sweeps and their CSV records.
"""
import math
from enum import Enum
from pathlib import Path
from typing import Any, List, Optional

from pydantic import BaseModel, Field, field_validator

from rotation_sync import __version__
from rotation_sync.application.dtos.solve_dto import SolverSettingsDTO
from rotation_sync.core.domain.config import (
    DEFAULT_MISSING_FRACTIONS,
    DEFAULT_NODE_COUNTS,
    DEFAULT_OUTLIER_FRACTION,
    DEFAULT_OUTLIER_MODE,
    DEFAULT_SWEEP_DEPTHS,
    DEFAULT_SWEEP_SEEDS,
)
from rotation_sync.core.domain.entities.factorization import LossKind
from rotation_sync.core.domain.entities.rotation import SamplingMode
from rotation_sync.core.domain.entities.synchronization import SyncMethod


class SweepSpec(BaseModel):
    """
    DTO describing a grid of synthetic experiments.

    Each missing fraction m is turned into the edge probability p = 1 - m.
    DMF runs once per depth and loss; baselines run once per instance.
    """
    node_counts: List[int] = Field(default_factory=lambda: list(DEFAULT_NODE_COUNTS), min_length=1)
    missing_fractions: List[float] = Field(
        default_factory=lambda: list(DEFAULT_MISSING_FRACTIONS), min_length=1
    )
    depths: List[int] = Field(default_factory=lambda: list(DEFAULT_SWEEP_DEPTHS), min_length=1)
    seeds: List[int] = Field(default_factory=lambda: list(DEFAULT_SWEEP_SEEDS), min_length=1)
    outlier_fraction: float = Field(default=DEFAULT_OUTLIER_FRACTION, ge=0.0, le=1.0)
    sigma_deg: float = Field(default=5.0, ge=0.0)
    outlier_mode: SamplingMode = SamplingMode(DEFAULT_OUTLIER_MODE)
    methods: List[SyncMethod] = Field(default_factory=lambda: [SyncMethod.DMF], min_length=1)
    losses: List[LossKind] = Field(default_factory=lambda: [LossKind.L1], min_length=1)
    solver: SolverSettingsDTO = Field(default_factory=SolverSettingsDTO)
    record_wall_time: bool = False

    @field_validator("node_counts")
    @classmethod
    def check_node_counts(cls, values: List[int]) -> List[int]:
        if any(n < 2 for n in values):
            raise ValueError("node counts must be at least 2")
        return values

    @field_validator("missing_fractions")
    @classmethod
    def check_missing_fractions(cls, values: List[float]) -> List[float]:
        if any(not 0.0 <= m < 1.0 for m in values):
            raise ValueError("missing fractions must lie in [0, 1)")
        return values

    @field_validator("depths")
    @classmethod
    def check_depths(cls, values: List[int]) -> List[int]:
        if any(d < 2 for d in values):
            raise ValueError("depths must be at least 2")
        return values

    @field_validator("seeds")
    @classmethod
    def check_seeds(cls, values: List[int]) -> List[int]:
        if any(s < 0 for s in values):
            raise ValueError("seeds must be non-negative")
        return values


class RunRecord(BaseModel):
    """
    One CSV row: every input of a run and its outcome.

    Field order is the CSV column order.
    """
    n: int
    p: Optional[float] = None
    missing_requested: Optional[float] = None
    missing_realized: Optional[float] = None
    outlier_fraction: Optional[float] = None
    sigma_deg: Optional[float] = None
    depth: Optional[int] = None
    lr: Optional[float] = None
    momentum: Optional[float] = None
    init_std: Optional[float] = None
    seed: Optional[int] = None
    method: SyncMethod
    mean_err_deg: Optional[float] = None
    median_err_deg: Optional[float] = None
    final_loss: Optional[float] = None
    sv3: Optional[float] = None
    sv4: Optional[float] = None
    iters: Optional[int] = None
    stop_reason: Optional[str] = None
    wall_s: Optional[float] = None
    status: str = "ok"
    loss: Optional[LossKind] = None
    outlier_mode: Optional[SamplingMode] = None
    max_iters: Optional[int] = None
    plateau_window: Optional[int] = None
    plateau_rel_tol: Optional[float] = None
    n_edges: Optional[int] = None
    heldout_err: Optional[float] = None
    version: str = __version__

    @staticmethod
    def columns() -> List[str]:
        """CSV header in column order."""
        return list(RunRecord.model_fields)

    def to_row(self) -> List[str]:
        """Render every field as a CSV cell; missing values become empty cells."""
        return [_format_cell(getattr(self, name)) for name in self.columns()]


def _format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, float):
        return "nan" if math.isnan(value) else repr(value)
    return str(value)


class SweepResponseDTO(BaseModel):
    """DTO summarizing a finished sweep."""
    output_path: Path
    rows: int
    failures: int

    def summary(self) -> str:
        """One-line human-readable summary."""
        return f"wrote {self.rows} rows to {self.output_path} ({self.failures} failed)"
