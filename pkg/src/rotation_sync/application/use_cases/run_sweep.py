"""
Use case for running a grid of synthetic experiments and writing one CSV row per run.

Runs are independent and execute on a thread pool; rows are written in job
order, so the output does not depend on completion order.
"""
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Optional

from rotation_sync.application.dtos.sweep_dto import RunRecord, SweepResponseDTO, SweepSpec
from rotation_sync.application.interfaces.run_record_writer_interface import RunRecordWriterInterface
from rotation_sync.application.services.run_record_builder import build_run_record
from rotation_sync.application.use_cases.solve_instance import SynchronizerFactory
from rotation_sync.core.domain.entities.absolute_rotations import AbsoluteRotations
from rotation_sync.core.domain.entities.factorization import LossKind, SolverConfig
from rotation_sync.core.domain.entities.synchronization import SyncMethod
from rotation_sync.core.domain.entities.view_graph import SyntheticSpec, ViewGraph
from rotation_sync.core.domain.errors import RotationSyncError
from rotation_sync.core.services.evaluation import angular_error_report
from rotation_sync.core.services.synchronizers import build_synchronizer
from rotation_sync.core.services.view_graph_generator import generate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepJob:
    """One (instance, method configuration) pair of a sweep."""

    n: int
    missing: float
    seed: int
    method: SyncMethod
    loss: Optional[LossKind] = None
    depth: Optional[int] = None

    def describe(self) -> str:
        """Short label for log messages."""
        label = f"n={self.n} missing={self.missing} seed={self.seed} {self.method.value}"
        if self.method is SyncMethod.DMF:
            label += f" depth={self.depth} loss={self.loss.value}"
        return label


def expand_jobs(spec: SweepSpec) -> list[SweepJob]:
    """
    Enumerate the runs of a sweep in their output order.

    Order is node count, missing fraction, method, loss, depth, then seed.
    """
    jobs = []
    for n in spec.node_counts:
        for missing in spec.missing_fractions:
            for method in spec.methods:
                if method is SyncMethod.DMF:
                    for loss in spec.losses:
                        for depth in spec.depths:
                            jobs.extend(
                                SweepJob(n, missing, seed, method, loss, depth) for seed in spec.seeds
                            )
                else:
                    jobs.extend(SweepJob(n, missing, seed, method) for seed in spec.seeds)
    return jobs


class RunSweep:
    """Use case for running a benchmark sweep."""

    def __init__(
        self,
        record_writer: RunRecordWriterInterface,
        workers: int = 1,
        synchronizer_factory: SynchronizerFactory = build_synchronizer,
        generator: Callable[[SyntheticSpec], ViewGraph] = generate,
    ):
        """
        Initialize the use case.

        Args:
            record_writer: Writer for the CSV output
            workers: Number of runs executing concurrently
            synchronizer_factory: Builds the synchronizer for a method
            generator: Produces a synthetic instance from its parameters
        """
        self.record_writer = record_writer
        self.workers = max(1, workers)
        self.synchronizer_factory = synchronizer_factory
        self.generator = generator

    def execute(self, spec: SweepSpec, out_path: Path) -> SweepResponseDTO:
        """
        Run every job of the sweep and write the CSV.

        Failed runs are recorded with an ``error:<ErrorClassName>`` status and
        do not stop the sweep.

        Args:
            spec: The experiment grid
            out_path: CSV destination, replaced if it exists

        Returns:
            Row and failure counts
        """
        jobs = expand_jobs(spec)
        logger.info(f"Running {len(jobs)} sweep jobs on {self.workers} workers")

        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            records = list(pool.map(lambda job: self._run_job(job, spec), jobs))

        written = self.record_writer.write(records, out_path)
        failures = sum(1 for record in records if record.status != "ok")
        logger.info(f"Sweep finished: {len(records)} rows, {failures} failures")
        return SweepResponseDTO(output_path=written, rows=len(records), failures=failures)

    def _run_job(self, job: SweepJob, spec: SweepSpec) -> RunRecord:
        edge_prob = round(1.0 - job.missing, 12)
        instance: dict[str, Any] = {
            "p": edge_prob,
            "missing_requested": job.missing,
            "outlier_fraction": spec.outlier_fraction,
            "sigma_deg": spec.sigma_deg,
            "outlier_mode": spec.outlier_mode,
            "seed": job.seed,
        }
        config = None
        if job.method is SyncMethod.DMF:
            config = spec.solver.to_config(depth=job.depth, loss=job.loss, seed=job.seed)

        graph = None
        try:
            graph = self.generator(SyntheticSpec(
                n=job.n,
                edge_prob=edge_prob,
                outlier_fraction=spec.outlier_fraction,
                noise_sigma=math.radians(spec.sigma_deg),
                seed=job.seed,
                outlier_mode=spec.outlier_mode,
            ))
            started = time.perf_counter()
            result = self.synchronizer_factory(job.method, config).synchronize(graph)
            elapsed = time.perf_counter() - started
            error_report = angular_error_report(result.rotations, AbsoluteRotations(graph.ground_truth))
        except RotationSyncError as e:
            logger.warning(f"Sweep job {job.describe()} failed: {e}")
            return self._failed(job, graph, config, instance, e)
        except Exception as e:
            logger.exception(f"Unexpected error in sweep job {job.describe()}: {e}")
            return self._failed(job, graph, config, instance, e)

        logger.debug(f"Sweep job {job.describe()}: {error_report}")
        return build_run_record(
            job.method,
            job.n,
            graph=graph,
            result=result,
            error_report=error_report,
            config=config,
            instance=instance,
            wall_s=elapsed if spec.record_wall_time else None,
        )

    @staticmethod
    def _failed(job: SweepJob, graph: Optional[ViewGraph], config: Optional[SolverConfig],
                instance: dict[str, Any], error: Exception) -> RunRecord:
        return build_run_record(
            job.method,
            job.n,
            graph=graph,
            config=config,
            instance=instance,
            status=f"error:{type(error).__name__}",
        )
