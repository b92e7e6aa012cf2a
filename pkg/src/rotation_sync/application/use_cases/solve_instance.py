"""
Use case for solving a stored view graph with one synchronization method.

The graph is read, synchronized, and the recovered rotations are written in
the ground-truth file format. When a ground truth is supplied, the gauge-aligned
errors are written to a CSV report. The report is replaced on every run
unless appending is requested.
"""
import logging
import time
from typing import Callable, Optional

from rotation_sync import __version__
from rotation_sync.application.dtos.solve_dto import SolveRequestDTO, SolveResponseDTO
from rotation_sync.application.interfaces.run_record_writer_interface import RunRecordWriterInterface
from rotation_sync.application.interfaces.view_graph_store_interface import (
    RotationStoreInterface,
    ViewGraphStoreInterface,
)
from rotation_sync.application.services.run_record_builder import build_run_record
from rotation_sync.core.domain.entities.absolute_rotations import AbsoluteRotations
from rotation_sync.core.domain.entities.factorization import SolverConfig
from rotation_sync.core.domain.entities.synchronization import SynchronizationResult, SyncMethod
from rotation_sync.core.interfaces.rotation_synchronizer import RotationSynchronizer
from rotation_sync.core.services.evaluation import angular_error_report
from rotation_sync.core.services.synchronizers import build_synchronizer

logger = logging.getLogger(__name__)

SynchronizerFactory = Callable[[SyncMethod, Optional[SolverConfig]], RotationSynchronizer]


class SolveInstance:
    """Use case for solving one view graph file."""

    def __init__(
        self,
        view_graph_store: ViewGraphStoreInterface,
        rotation_store: RotationStoreInterface,
        record_writer: RunRecordWriterInterface,
        synchronizer_factory: SynchronizerFactory = build_synchronizer,
    ):
        """
        Initialize the use case with its adapters.

        Args:
            view_graph_store: Store the input graph is read from
            rotation_store: Store the recovered rotations are written to
            record_writer: Writer for the optional CSV error report
            synchronizer_factory: Builds the synchronizer for a method
        """
        self.view_graph_store = view_graph_store
        self.rotation_store = rotation_store
        self.record_writer = record_writer
        self.synchronizer_factory = synchronizer_factory

    def execute(self, request: SolveRequestDTO) -> SolveResponseDTO:
        """
        Execute the use case.

        Args:
            request: Input and output paths, method and solver settings

        Returns:
            Summary of the solve and, with a ground truth, its errors
        """
        graph = self.view_graph_store.load_graph(request.input_path, request.ground_truth_path)
        config = request.solver.to_config()
        synchronizer = self.synchronizer_factory(request.method, config)

        started = time.perf_counter()
        result = synchronizer.synchronize(graph)
        elapsed = time.perf_counter() - started

        error_report = None
        if graph.ground_truth is not None:
            error_report = angular_error_report(result.rotations, AbsoluteRotations(graph.ground_truth))
            logger.info(f"Errors against ground truth: {error_report}")

        output_path = self.rotation_store.save_rotations(
            result.rotations, request.out_path, self._metadata(result)
        )

        report_path = request.report_path
        if report_path is None and error_report is not None:
            report_path = request.out_path.with_suffix(".csv")
        if report_path is not None:
            record = build_run_record(
                request.method,
                graph.n,
                graph=graph,
                result=result,
                error_report=error_report,
                config=config,
                wall_s=elapsed if request.record_wall_time else None,
            )
            if request.append_report:
                self.record_writer.append([record], report_path)
            else:
                self.record_writer.write([record], report_path)

        report = result.solve_report
        logger.info(f"Solved {request.input_path} with {request.method.value} in {elapsed:.2f} s")
        return SolveResponseDTO(
            output_path=output_path,
            method=request.method,
            n=graph.n,
            n_edges=graph.edge_count,
            iterations=report.iterations_run if report else None,
            stop_reason=report.stop_reason.value if report else None,
            final_loss=report.final_loss if report else None,
            mean_err_deg=error_report.mean if error_report else None,
            median_err_deg=error_report.median if error_report else None,
            report_path=report_path,
        )

    @staticmethod
    def _metadata(result: SynchronizationResult) -> dict[str, object]:
        """Run description written as comments above the rotations."""
        metadata: dict[str, object] = {"method": result.method.value, "version": __version__}
        report = result.solve_report
        if report is not None:
            config = report.config
            metadata.update({
                "depth": config.depth,
                "lr": config.learning_rate,
                "momentum": config.momentum,
                "init_std": config.init_std,
                "max_iters": config.max_iters,
                "plateau_window": config.plateau_window,
                "plateau_rel_tol": config.plateau_rel_tol,
                "loss": config.loss.value,
                "seed": config.seed,
                "stop_reason": report.stop_reason.value,
                "iterations": report.iterations_run,
                "final_loss": report.final_loss,
            })
        return metadata
