"""
Shared reading and writing helpers for the plain-text formats.

Files are line oriented: ``#`` starts a comment line, blank lines are ignored,
the first record is the header ``n <count>`` and node indices are 1-based.
Rotation entries are written row-major with 17 significant digits so that
values survive a write and read unchanged.
"""
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from rotation_sync.core.domain.config import MEASUREMENT_TOLERANCE, ROTATION_TOLERANCE
from rotation_sync.core.domain.entities.rotation import Rotation, is_rotation
from rotation_sync.core.domain.errors import (
    DegenerateProjectionError,
    GraphInvariantError,
    InvalidRotationError,
    ParseError,
)
from rotation_sync.core.services.so3 import project_to_so3

COMMENT = "#"


def format_float(value: float) -> str:
    return "%.17g" % value


def format_rotation(matrix: np.ndarray) -> str:
    """Nine row-major entries separated by spaces."""
    return " ".join(format_float(v) for v in np.asarray(matrix).ravel())


def iter_records(path: Path) -> Iterator[tuple[int, list[str]]]:
    """Yield (line number, tokens) for every non-blank, non-comment line."""
    with open(path, "r", encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith(COMMENT):
                continue
            yield line_number, stripped.split()


def parse_header(path: Path, records: Iterator[tuple[int, list[str]]]) -> int:
    """Read the ``n <count>`` header and return the node count."""
    try:
        line_number, tokens = next(records)
    except StopIteration:
        raise ParseError("missing 'n <count>' header", path) from None
    if len(tokens) != 2 or tokens[0] != "n":
        raise ParseError(f"expected 'n <count>' header, got {' '.join(tokens)!r}", path, line_number)
    n = parse_int(tokens[1], path, line_number)
    if n < 1:
        raise ParseError(f"node count must be positive, got {n}", path, line_number)
    return n


def parse_int(token: str, path: Path, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", path, line_number) from None


def parse_node(token: str, n: int, path: Path, line_number: int) -> int:
    """Convert a 1-based node index to 0-based; out-of-range indices violate the graph."""
    index = parse_int(token, path, line_number)
    if not 1 <= index <= n:
        raise GraphInvariantError(f"node index {index} is outside 1..{n}", path, line_number)
    return index - 1


def parse_rotation(tokens: Sequence[str], path: Path, line_number: int) -> Rotation:
    """
    Parse nine row-major entries into a rotation.

    Matrices within MEASUREMENT_TOLERANCE of SO(3) are re-projected when they
    miss the strict tolerance; anything further off is rejected.

    Raises:
        ParseError: If the entries are not nine numbers
        GraphInvariantError: If the matrix is not a rotation, a reflection included
    """
    if len(tokens) != 9:
        raise ParseError(f"expected 9 rotation entries, got {len(tokens)}", path, line_number)
    try:
        matrix = np.array([float(t) for t in tokens]).reshape(3, 3)
    except ValueError as e:
        raise ParseError(f"invalid number in rotation: {e}", path, line_number) from None

    if is_rotation(matrix, ROTATION_TOLERANCE):
        return Rotation(matrix)
    if not is_rotation(matrix, MEASUREMENT_TOLERANCE):
        raise GraphInvariantError("matrix is not a rotation", path, line_number)
    try:
        return project_to_so3(matrix)
    except (InvalidRotationError, DegenerateProjectionError) as e:
        raise GraphInvariantError(
            f"cannot project matrix onto SO(3): {e}", path, line_number
        ) from None
