"""
Run Record Writer Interface.

This interface defines the contract for adapters that persist run records.
"""
from pathlib import Path
from typing import Iterable, Protocol, runtime_checkable

from rotation_sync.application.dtos.sweep_dto import RunRecord


@runtime_checkable
class RunRecordWriterInterface(Protocol):
    """
    Interface for writers of tabular run records.
    """

    def write(self, records: Iterable[RunRecord], path: Path) -> Path:
        """
        Replace ``path`` with a header row followed by the records in order.

        Returns:
            Path: The file written
        """
        ...

    def append(self, records: Iterable[RunRecord], path: Path) -> Path:
        """
        Append records to ``path``, writing the header first if the file is new.

        Returns:
            Path: The file written
        """
        ...
