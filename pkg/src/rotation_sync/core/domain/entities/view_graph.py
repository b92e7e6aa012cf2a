"""
View graph entity: absolute rotations as nodes, measured relative rotations as edges.
"""
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

from rotation_sync.core.domain.config import (
    DEFAULT_NOISE_SIGMA,
    DEFAULT_OUTLIER_FRACTION,
    DEFAULT_OUTLIER_MODE,
)
from rotation_sync.core.domain.entities.rotation import Rotation, SamplingMode
from rotation_sync.core.domain.errors import GraphInvariantError, InvalidConfigurationError

MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class Edge:
    """
    A measured relative rotation between nodes i < j.

    The rotation is the measurement of R_i·R_jᵀ; the (j, i) direction is its
    transpose. ``is_outlier`` is bookkeeping from synthetic generation and is
    neither persisted nor compared.
    """

    i: int
    j: int
    rotation: Rotation
    is_outlier: Optional[bool] = field(default=None, compare=False)


@dataclass(frozen=True)
class ViewGraph:
    """
    A rotation synchronization problem.

    Nodes are numbered 0..n-1. Edges are kept sorted by (i, j) so that two
    graphs with the same measurements compare equal and serialize identically.
    """

    n: int
    edges: tuple[Edge, ...]
    ground_truth: Optional[tuple[Rotation, ...]] = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphInvariantError(f"A view graph needs at least one node, got n={self.n}")

        edges = tuple(sorted(self.edges, key=lambda e: (e.i, e.j)))
        seen = set()
        for edge in edges:
            if edge.i == edge.j:
                raise GraphInvariantError(f"Self-loop on node {edge.i}")
            if edge.i > edge.j:
                raise GraphInvariantError(
                    f"Edge ({edge.i}, {edge.j}) must be stored with i < j"
                )
            if edge.i < 0 or edge.j >= self.n:
                raise GraphInvariantError(
                    f"Edge ({edge.i}, {edge.j}) is out of range for n={self.n}"
                )
            if (edge.i, edge.j) in seen:
                raise GraphInvariantError(f"Duplicate edge ({edge.i}, {edge.j})")
            seen.add((edge.i, edge.j))
        object.__setattr__(self, "edges", edges)

        if self.ground_truth is not None:
            ground_truth = tuple(self.ground_truth)
            if len(ground_truth) != self.n:
                raise GraphInvariantError(
                    f"Ground truth has {len(ground_truth)} rotations for n={self.n}"
                )
            object.__setattr__(self, "ground_truth", ground_truth)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge],
                   ground_truth: Optional[Iterable[Rotation]] = None) -> "ViewGraph":
        """
        Build a graph from edges given in either orientation.

        Edges with i > j are flipped and their rotation transposed, which keeps
        the measurement meaning R_i·R_jᵀ intact.
        """
        oriented = []
        for edge in edges:
            if edge.i > edge.j:
                edge = Edge(edge.j, edge.i, edge.rotation.T, is_outlier=edge.is_outlier)
            oriented.append(edge)
        return cls(
            n=n,
            edges=tuple(oriented),
            ground_truth=tuple(ground_truth) if ground_truth is not None else None,
        )

    @property
    def edge_count(self) -> int:
        """Number of measured edges."""
        return len(self.edges)

    @property
    def edge_fraction(self) -> float:
        """Fraction of the complete graph's edges that were measured."""
        possible = self.n * (self.n - 1) // 2
        return self.edge_count / possible if possible else 0.0

    @property
    def redundancy(self) -> float:
        """Edges per node; a spanning tree has (n-1)/n."""
        return self.edge_count / self.n

    def with_ground_truth(self, ground_truth: Iterable[Rotation]) -> "ViewGraph":
        """Return a copy of this graph carrying the given ground truth."""
        return ViewGraph(n=self.n, edges=self.edges, ground_truth=tuple(ground_truth))


@dataclass(frozen=True)
class SyntheticSpec:
    """Parameters of an Erdős–Rényi synthetic synchronization instance."""

    n: int
    edge_prob: float
    outlier_fraction: float = DEFAULT_OUTLIER_FRACTION
    noise_sigma: float = DEFAULT_NOISE_SIGMA
    seed: int = 0
    outlier_mode: SamplingMode = SamplingMode(DEFAULT_OUTLIER_MODE)

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InvalidConfigurationError(f"n must be at least 2, got {self.n}")
        if not 0.0 <= self.edge_prob <= 1.0:
            raise InvalidConfigurationError(f"edge_prob must lie in [0, 1], got {self.edge_prob}")
        if not 0.0 <= self.outlier_fraction <= 1.0:
            raise InvalidConfigurationError(
                f"outlier_fraction must lie in [0, 1], got {self.outlier_fraction}"
            )
        if not (math.isfinite(self.noise_sigma) and self.noise_sigma >= 0.0):
            raise InvalidConfigurationError(
                f"noise_sigma must be a finite non-negative angle, got {self.noise_sigma}"
            )
        if not 0 <= self.seed <= MAX_SEED:
            raise InvalidConfigurationError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        object.__setattr__(self, "outlier_mode", SamplingMode(self.outlier_mode))
