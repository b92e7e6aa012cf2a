"""
Text storage for view graphs.

Edge list format::

    n <count>
    <i> <j> r11 r12 r13 r21 r22 r23 r31 r32 r33

where the rotation is the measurement of R_i·R_jᵀ and indices are 1-based.
Edges may appear in either orientation; (j, i) lines are stored transposed.
The ground truth goes to a sibling rotation file named ``<stem>.gt<suffix>``.
"""
import logging
from pathlib import Path
from typing import List, Optional

from rotation_sync.adapters.storage.text_format import (
    format_rotation,
    iter_records,
    parse_header,
    parse_node,
    parse_rotation,
)
from rotation_sync.adapters.storage.text_rotation_store import TextRotationStore
from rotation_sync.core.domain.entities.absolute_rotations import AbsoluteRotations
from rotation_sync.core.domain.entities.view_graph import Edge, ViewGraph
from rotation_sync.core.domain.errors import GraphInvariantError, ParseError

logger = logging.getLogger(__name__)


class TextViewGraphStore:
    """Reads and writes view graphs as whitespace-separated edge lists."""

    def __init__(self, rotation_store: Optional[TextRotationStore] = None):
        """
        Initialize the store.

        Args:
            rotation_store: Store used for ground-truth files
        """
        self.rotation_store = rotation_store or TextRotationStore()

    def ground_truth_path_for(self, path: Path) -> Path:
        path = Path(path)
        return path.with_name(f"{path.stem}.gt{path.suffix}")

    def save_graph(self, graph: ViewGraph, path: Path) -> List[Path]:
        path = Path(path)
        lines = [f"n {graph.n}"]
        lines.extend(
            f"{edge.i + 1} {edge.j + 1} {format_rotation(edge.rotation.matrix)}"
            for edge in graph.edges
        )
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        written = [path]

        if graph.ground_truth is not None:
            written.append(self.rotation_store.save_rotations(
                AbsoluteRotations(graph.ground_truth), self.ground_truth_path_for(path)
            ))
        logger.info(f"Saved view graph with n={graph.n}, |E|={graph.edge_count} to {path}")
        return written

    def load_graph(self, path: Path, ground_truth_path: Optional[Path] = None) -> ViewGraph:
        path = Path(path)
        records = iter_records(path)
        n = parse_header(path, records)

        edges = []
        seen = set()
        for line_number, tokens in records:
            if len(tokens) != 11:
                raise ParseError(f"expected 11 fields, got {len(tokens)}", path, line_number)
            i = parse_node(tokens[0], n, path, line_number)
            j = parse_node(tokens[1], n, path, line_number)
            if i == j:
                raise GraphInvariantError(f"self-loop on node {i + 1}", path, line_number)
            key = (min(i, j), max(i, j))
            if key in seen:
                raise GraphInvariantError(f"duplicate edge ({i + 1}, {j + 1})", path, line_number)
            seen.add(key)
            edges.append(Edge(i, j, parse_rotation(tokens[2:], path, line_number)))

        ground_truth = None
        if ground_truth_path is not None:
            ground_truth = self.rotation_store.load_rotations(ground_truth_path)
            if len(ground_truth) != n:
                raise ParseError(
                    f"ground truth has {len(ground_truth)} rotations but the graph has n={n}",
                    ground_truth_path,
                )
            ground_truth = ground_truth.rotations

        logger.debug(f"Loaded view graph with n={n}, |E|={len(edges)} from {path}")
        return ViewGraph.from_edges(n, edges, ground_truth)
