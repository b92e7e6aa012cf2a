"""
Assembly of RunRecord rows from solver outcomes.

Shared by the solve and sweep use cases so both emit the same CSV schema.
"""
from typing import Any, Mapping, Optional

from rotation_sync.application.dtos.sweep_dto import RunRecord
from rotation_sync.core.domain.entities.error_report import ErrorReport
from rotation_sync.core.domain.entities.factorization import SolverConfig
from rotation_sync.core.domain.entities.synchronization import SynchronizationResult, SyncMethod
from rotation_sync.core.domain.entities.view_graph import ViewGraph


def _config_fields(config: SolverConfig) -> dict[str, Any]:
    return {
        "depth": config.depth,
        "lr": config.learning_rate,
        "momentum": config.momentum,
        "init_std": config.init_std,
        "seed": config.seed,
        "loss": config.loss,
        "max_iters": config.max_iters,
        "plateau_window": config.plateau_window,
        "plateau_rel_tol": config.plateau_rel_tol,
    }


def build_run_record(
    method: SyncMethod,
    n: int,
    graph: Optional[ViewGraph] = None,
    result: Optional[SynchronizationResult] = None,
    error_report: Optional[ErrorReport] = None,
    config: Optional[SolverConfig] = None,
    instance: Optional[Mapping[str, Any]] = None,
    wall_s: Optional[float] = None,
    status: str = "ok",
) -> RunRecord:
    """
    Collect every known input and outcome of a run into one record.

    Args:
        method: Synchronization method of the run
        n: Node count
        graph: The solved graph, for realized edge statistics
        result: Synchronizer output; DMF results contribute solver instrumentation
        error_report: Gauge-aligned errors, when a ground truth was available
        config: Solver configuration, recorded for DMF runs even when they fail
        instance: Synthetic instance fields (p, missing_requested,
            outlier_fraction, sigma_deg, outlier_mode, seed)
        wall_s: Elapsed seconds, only when timing is recorded
        status: ``ok`` or ``error:<ErrorClassName>``

    Returns:
        RunRecord: The CSV row
    """
    fields: dict[str, Any] = {"n": n, "method": method, "status": status, "wall_s": wall_s}
    if instance:
        fields.update(instance)
    if config is not None and method is SyncMethod.DMF:
        fields.update(_config_fields(config))
    if graph is not None:
        fields["n_edges"] = graph.edge_count
        fields["missing_realized"] = 1.0 - graph.edge_fraction
    if error_report is not None:
        fields["mean_err_deg"] = error_report.mean
        fields["median_err_deg"] = error_report.median

    report = result.solve_report if result is not None else None
    if report is not None:
        fields.update(_config_fields(report.config))
        fields["final_loss"] = report.final_loss
        fields["iters"] = report.iterations_run
        fields["stop_reason"] = report.stop_reason.value
        fields["heldout_err"] = report.heldout_error
        values = report.singular_values
        if len(values) > 2:
            fields["sv3"] = float(values[2])
        if len(values) > 3:
            fields["sv4"] = float(values[3])
    return RunRecord(**fields)
