import csv

import pytest

from rotation_sync.adapters.reporting.csv_run_record_writer import CsvRunRecordWriter
from rotation_sync.application.dtos.sweep_dto import RunRecord
from rotation_sync.core.domain.entities.synchronization import SyncMethod


@pytest.fixture
def records():
    return [
        RunRecord(n=10, p=0.5, method=SyncMethod.DMF, depth=3, mean_err_deg=1.5),
        RunRecord(n=10, p=0.5, method=SyncMethod.SPECTRAL, status="error:SpectralGapError"),
    ]


class TestCsvRunRecordWriter:
    def test_write(self, records, tmp_path):
        """Test that write emits the header and one row per record."""
        # Arrange
        writer = CsvRunRecordWriter()

        # Act
        path = writer.write(records, tmp_path / "runs.csv")

        # Assert
        with open(path, newline="") as handle:
            rows = list(csv.reader(handle))
        assert rows[0] == RunRecord.columns()
        assert len(rows) == 3
        assert rows[2][RunRecord.columns().index("status")] == "error:SpectralGapError"

    def test_unix_line_endings(self, records, tmp_path):
        """Test that rows end in a bare newline."""
        # Act
        path = CsvRunRecordWriter().write(records, tmp_path / "runs.csv")

        # Assert
        content = path.read_bytes()
        assert b"\r" not in content
        assert content.endswith(b"\n")

    def test_write_is_byte_identical(self, records, tmp_path):
        """Test that writing the same records twice gives the same bytes."""
        # Arrange
        writer = CsvRunRecordWriter()

        # Act
        first = writer.write(records, tmp_path / "a.csv").read_bytes()
        second = writer.write(records, tmp_path / "b.csv").read_bytes()

        # Assert
        assert first == second

    def test_write_replaces(self, records, tmp_path):
        """Test that write overwrites an existing file."""
        # Arrange
        writer = CsvRunRecordWriter()
        writer.write(records, tmp_path / "runs.csv")

        # Act
        writer.write(records[:1], tmp_path / "runs.csv")

        # Assert
        assert len((tmp_path / "runs.csv").read_text().splitlines()) == 2

    def test_append_adds_header_once(self, records, tmp_path):
        """Test that appending writes the header only to a new file."""
        # Arrange
        writer = CsvRunRecordWriter()
        path = tmp_path / "runs.csv"

        # Act
        writer.append(records[:1], path)
        writer.append(records[1:], path)

        # Assert
        lines = path.read_text().splitlines()
        assert len(lines) == 3
        assert lines[0].startswith("n,p,missing_requested")
        assert sum(1 for line in lines if line.startswith("n,")) == 1

    def test_append_to_empty_file(self, records, tmp_path):
        """Test that an existing empty file still gets a header."""
        # Arrange
        path = tmp_path / "runs.csv"
        path.touch()

        # Act
        CsvRunRecordWriter().append(records[:1], path)

        # Assert
        assert path.read_text().startswith("n,p,")
