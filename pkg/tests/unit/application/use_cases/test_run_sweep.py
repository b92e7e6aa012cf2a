"""
Unit tests for the RunSweep use case.
"""
from pathlib import Path
from unittest.mock import MagicMock

import pytest

from rotation_sync.application.dtos.solve_dto import SolverSettingsDTO
from rotation_sync.application.dtos.sweep_dto import SweepSpec
from rotation_sync.application.use_cases.run_sweep import RunSweep
from rotation_sync.core.domain.entities.synchronization import SyncMethod
from rotation_sync.core.domain.errors import DivergenceError


@pytest.fixture
def mock_writer():
    """A record writer that returns the requested path."""
    writer = MagicMock()
    writer.write.side_effect = lambda records, path: path
    return writer


@pytest.fixture
def baseline_spec():
    return SweepSpec(
        node_counts=[10], missing_fractions=[0.3, 0.5], seeds=[0, 1],
        methods=[SyncMethod.SPECTRAL, SyncMethod.SPANNING_TREE],
    )


class TestRunSweep:
    def test_execute(self, mock_writer, baseline_spec):
        """Test that every job produces one row in job order."""
        # Arrange
        use_case = RunSweep(mock_writer)

        # Act
        response = use_case.execute(baseline_spec, Path("sweep.csv"))

        # Assert
        records, path = mock_writer.write.call_args[0]
        assert path == Path("sweep.csv")
        assert response.rows == 8
        assert response.failures == 0
        assert [r.method for r in records[:4]] == [SyncMethod.SPECTRAL] * 2 + [SyncMethod.SPANNING_TREE] * 2
        assert [r.seed for r in records[:2]] == [0, 1]
        assert records[0].p == 0.7
        assert records[0].missing_requested == 0.3
        assert records[0].depth is None
        assert all(r.status == "ok" for r in records)
        assert all(r.wall_s is None for r in records)
        assert all(r.mean_err_deg is not None for r in records)

    def test_worker_count_does_not_change_rows(self, baseline_spec):
        """Test that parallel runs write exactly the serial rows."""
        # Arrange
        serial_writer, parallel_writer = MagicMock(), MagicMock()
        for writer in (serial_writer, parallel_writer):
            writer.write.side_effect = lambda records, path: path

        # Act
        RunSweep(serial_writer, workers=1).execute(baseline_spec, Path("a.csv"))
        RunSweep(parallel_writer, workers=4).execute(baseline_spec, Path("b.csv"))

        # Assert
        serial = [r.to_row() for r in serial_writer.write.call_args[0][0]]
        parallel = [r.to_row() for r in parallel_writer.write.call_args[0][0]]
        assert serial == parallel

    def test_failed_runs_are_recorded(self, mock_writer):
        """Test that a failing solve yields an error row and the sweep goes on."""
        # Arrange
        synchronizer = MagicMock()
        synchronizer.synchronize.side_effect = DivergenceError("loss exploded")
        spec = SweepSpec(
            node_counts=[8], missing_fractions=[0.5], depths=[2, 3], seeds=[0],
            solver=SolverSettingsDTO(lr=5.0),
        )
        use_case = RunSweep(mock_writer, synchronizer_factory=MagicMock(return_value=synchronizer))

        # Act
        response = use_case.execute(spec, Path("sweep.csv"))

        # Assert
        records = mock_writer.write.call_args[0][0]
        assert response.failures == 2
        assert [r.status for r in records] == ["error:DivergenceError"] * 2
        assert [r.depth for r in records] == [2, 3]
        assert records[0].lr == 5.0
        assert records[0].n_edges is not None
        assert records[0].mean_err_deg is None

    def test_unexpected_errors_are_recorded(self, mock_writer, baseline_spec):
        """Test that non-domain exceptions are contained per run."""
        # Arrange
        generator = MagicMock(side_effect=RuntimeError("boom"))
        use_case = RunSweep(mock_writer, generator=generator)

        # Act
        response = use_case.execute(baseline_spec, Path("sweep.csv"))

        # Assert
        records = mock_writer.write.call_args[0][0]
        assert response.failures == 8
        assert records[0].status == "error:RuntimeError"
        assert records[0].n_edges is None

    def test_wall_time_recorded_on_request(self, mock_writer):
        """Test that timings appear only when asked for."""
        # Arrange
        spec = SweepSpec(
            node_counts=[6], missing_fractions=[0.2], seeds=[0],
            methods=[SyncMethod.SPANNING_TREE], record_wall_time=True,
        )

        # Act
        RunSweep(mock_writer).execute(spec, Path("sweep.csv"))

        # Assert
        record = mock_writer.write.call_args[0][0][0]
        assert record.wall_s is not None
