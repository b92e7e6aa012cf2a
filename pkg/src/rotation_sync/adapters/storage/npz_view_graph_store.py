"""
Binary storage for view graphs as a single numpy archive.

The archive holds ``n``, ``edges`` (m x 2, 0-based), ``rotations`` (m x 3 x 3)
and, when known, ``ground_truth`` (n x 3 x 3).
"""
import logging
from pathlib import Path
from typing import List, Optional

import numpy as np

from rotation_sync.adapters.storage.text_rotation_store import TextRotationStore
from rotation_sync.core.domain.entities.rotation import Rotation
from rotation_sync.core.domain.entities.view_graph import Edge, ViewGraph
from rotation_sync.core.domain.errors import GraphInvariantError, InvalidRotationError, ParseError

logger = logging.getLogger(__name__)


class NpzViewGraphStore:
    """Reads and writes view graphs as ``.npz`` archives."""

    def __init__(self, rotation_store: Optional[TextRotationStore] = None):
        """
        Initialize the store.

        Args:
            rotation_store: Store used for separately supplied ground-truth files
        """
        self.rotation_store = rotation_store or TextRotationStore()

    def ground_truth_path_for(self, path: Path) -> Path:
        return Path(path)

    def save_graph(self, graph: ViewGraph, path: Path) -> List[Path]:
        path = Path(path)
        arrays = {
            "n": np.array(graph.n),
            "edges": np.array([(e.i, e.j) for e in graph.edges], dtype=np.int64).reshape(-1, 2),
            "rotations": np.array([e.rotation.matrix for e in graph.edges]).reshape(-1, 3, 3),
        }
        if graph.ground_truth is not None:
            arrays["ground_truth"] = np.stack([r.matrix for r in graph.ground_truth])
        with open(path, "wb") as handle:
            np.savez_compressed(handle, **arrays)
        logger.info(f"Saved view graph with n={graph.n}, |E|={graph.edge_count} to {path}")
        return [path]

    def load_graph(self, path: Path, ground_truth_path: Optional[Path] = None) -> ViewGraph:
        path = Path(path)
        try:
            with np.load(path, allow_pickle=False) as archive:
                n = int(archive["n"])
                pairs = np.asarray(archive["edges"], dtype=np.int64).reshape(-1, 2)
                matrices = np.asarray(archive["rotations"], dtype=float).reshape(-1, 3, 3)
                stored_truth = archive["ground_truth"] if "ground_truth" in archive.files else None
        except KeyError as e:
            raise ParseError(f"archive is missing array {e}", path) from None
        except ValueError as e:
            raise ParseError(f"not a valid numpy archive: {e}", path) from None

        if len(pairs) != len(matrices):
            raise ParseError(f"{len(pairs)} edges but {len(matrices)} rotations", path)
        ground_truth = None
        if ground_truth_path is not None:
            ground_truth = self.rotation_store.load_rotations(ground_truth_path).rotations
        try:
            edges = [Edge(int(i), int(j), Rotation(m)) for (i, j), m in zip(pairs, matrices)]
            if ground_truth is None and stored_truth is not None:
                ground_truth = tuple(Rotation(m) for m in stored_truth)
            return ViewGraph.from_edges(n, edges, ground_truth)
        except (GraphInvariantError, InvalidRotationError) as e:
            raise GraphInvariantError(str(e), path) from e
