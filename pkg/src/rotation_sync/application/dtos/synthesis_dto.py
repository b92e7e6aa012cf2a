"""
Data Transfer Objects for synthetic instance generation.
"""
from pathlib import Path

from pydantic import BaseModel, Field

from rotation_sync.core.domain.config import DEFAULT_OUTLIER_FRACTION, DEFAULT_OUTLIER_MODE
from rotation_sync.core.domain.entities.rotation import SamplingMode


class SynthRequestDTO(BaseModel):
    """DTO for a synthetic view-graph generation request."""
    n: int = Field(ge=2)
    p: float = Field(ge=0.0, le=1.0)
    outliers: float = Field(default=DEFAULT_OUTLIER_FRACTION, ge=0.0, le=1.0)
    sigma_deg: float = Field(default=5.0, ge=0.0)
    seed: int = Field(default=0, ge=0)
    outlier_mode: SamplingMode = SamplingMode(DEFAULT_OUTLIER_MODE)
    out_path: Path


class SynthResponseDTO(BaseModel):
    """DTO summarizing a generated instance."""
    graph_path: Path
    ground_truth_path: Path
    n: int
    n_edges: int
    n_outliers: int
    edge_fraction: float

    def summary(self) -> str:
        """One-line human-readable summary."""
        return (
            f"wrote {self.graph_path} and {self.ground_truth_path}: n={self.n}, "
            f"|E|={self.n_edges}, outliers={self.n_outliers}, "
            f"edge fraction={self.edge_fraction:.4f}"
        )
