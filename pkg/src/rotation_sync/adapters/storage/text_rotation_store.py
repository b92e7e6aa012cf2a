"""
Text storage for absolute rotation lists.

Format::

    # key: value        (optional metadata)
    n <count>
    <i> r11 r12 r13 r21 r22 r23 r31 r32 r33

with one line per node, 1-based indices, in any order.
"""
import logging
from pathlib import Path
from typing import Mapping, Optional

from rotation_sync.adapters.storage.text_format import (
    format_rotation,
    iter_records,
    parse_header,
    parse_node,
    parse_rotation,
)
from rotation_sync.core.domain.entities.absolute_rotations import AbsoluteRotations
from rotation_sync.core.domain.entities.rotation import Rotation
from rotation_sync.core.domain.errors import GraphInvariantError, ParseError

logger = logging.getLogger(__name__)


class TextRotationStore:
    """Reads and writes rotation lists, one node per line."""

    def save_rotations(self, rotations: AbsoluteRotations, path: Path,
                       metadata: Optional[Mapping[str, object]] = None) -> Path:
        path = Path(path)
        lines = [f"# {key}: {value}" for key, value in (metadata or {}).items()]
        lines.append(f"n {len(rotations)}")
        lines.extend(
            f"{index + 1} {format_rotation(rotation.matrix)}"
            for index, rotation in enumerate(rotations.rotations)
        )
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        logger.debug(f"Wrote {len(rotations)} rotations to {path}")
        return path

    def load_rotations(self, path: Path) -> AbsoluteRotations:
        path = Path(path)
        records = iter_records(path)
        n = parse_header(path, records)
        rotations: list[Optional[Rotation]] = [None] * n
        for line_number, tokens in records:
            if len(tokens) != 10:
                raise ParseError(f"expected 10 fields, got {len(tokens)}", path, line_number)
            node = parse_node(tokens[0], n, path, line_number)
            if rotations[node] is not None:
                raise GraphInvariantError(f"duplicate rotation for node {node + 1}", path, line_number)
            rotations[node] = parse_rotation(tokens[1:], path, line_number)

        missing = [index + 1 for index, rotation in enumerate(rotations) if rotation is None]
        if missing:
            raise ParseError(f"no rotation for nodes {missing[:10]}", path)
        return AbsoluteRotations(tuple(rotations))
