"""
CSV writer for run records.

Rows use a fixed header, minimal quoting and ``\n`` line endings, so that a
repeated run produces a byte-identical file.
"""
import csv
import logging
import threading
from pathlib import Path
from typing import Iterable

from rotation_sync.application.dtos.sweep_dto import RunRecord

logger = logging.getLogger(__name__)


class CsvRunRecordWriter:
    """Writes RunRecord rows to CSV files."""

    def __init__(self) -> None:
        self._lock = threading.Lock()

    def write(self, records: Iterable[RunRecord], path: Path) -> Path:
        return self._emit(records, Path(path), mode="w", header=True)

    def append(self, records: Iterable[RunRecord], path: Path) -> Path:
        path = Path(path)
        header = not path.exists() or path.stat().st_size == 0
        return self._emit(records, path, mode="a", header=header)

    def _emit(self, records: Iterable[RunRecord], path: Path, mode: str, header: bool) -> Path:
        with self._lock, open(path, mode, encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
            if header:
                writer.writerow(RunRecord.columns())
            count = 0
            for record in records:
                writer.writerow(record.to_row())
                count += 1
        logger.info(f"Wrote {count} run records to {path}")
        return path
