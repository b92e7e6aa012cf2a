"""
Controller for the ``sweep`` command.
"""
import argparse
from pathlib import Path
from typing import Any, Callable, Dict

from rotation_sync.adapters.cli.controller_support import (
    add_solver_arguments,
    run_guarded,
    solver_settings_from_args,
)
from rotation_sync.application.dtos.sweep_dto import SweepSpec
from rotation_sync.application.use_cases.run_sweep import RunSweep
from rotation_sync.core.domain.entities.factorization import LossKind
from rotation_sync.core.domain.entities.rotation import SamplingMode
from rotation_sync.core.domain.entities.synchronization import SyncMethod

# flag destination -> SweepSpec field
SWEEP_FLAGS = {
    "node_counts": "node_counts",
    "missing": "missing_fractions",
    "depths": "depths",
    "seeds": "seeds",
    "outliers": "outlier_fraction",
    "sigma_deg": "sigma_deg",
    "outlier_mode": "outlier_mode",
    "methods": "methods",
    "losses": "losses",
}


class SweepController:
    """Translates ``sweep`` arguments into a SweepSpec and runs it."""

    def __init__(self, sweep_factory: Callable[[int], RunSweep], default_workers: int):
        """
        Initialize the controller.

        Args:
            sweep_factory: Builds the sweep use case for a worker count
            default_workers: Worker count used when ``--workers`` is absent
        """
        self.sweep_factory = sweep_factory
        self.default_workers = default_workers

    @staticmethod
    def configure(parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--spec", type=Path, help="JSON sweep specification; flags override it")
        parser.add_argument("--n", dest="node_counts", type=int, nargs="+", help="node counts")
        parser.add_argument("--missing", type=float, nargs="+", help="fractions of missing edges")
        parser.add_argument("--depths", type=int, nargs="+", help="factorization depths")
        parser.add_argument("--seeds", type=int, nargs="+", help="instance and initialization seeds")
        parser.add_argument("--outliers", type=float, help="outlier fraction")
        parser.add_argument("--sigma-deg", type=float, help="noise standard deviation in degrees")
        parser.add_argument("--outlier-mode", choices=[m.value for m in SamplingMode])
        parser.add_argument("--methods", nargs="+", choices=[m.value for m in SyncMethod])
        parser.add_argument("--losses", nargs="+", choices=[k.value for k in LossKind])
        parser.add_argument("--workers", type=int, help="concurrent runs")
        parser.add_argument("--record-wall-time", action="store_true", help="fill the wall_s column")
        parser.add_argument("--out", type=Path, required=True, help="CSV output file")
        add_solver_arguments(parser, exclude=("depth", "loss", "seed"))

    def build_spec(self, args: argparse.Namespace) -> SweepSpec:
        """Merge the optional JSON specification with the given flags."""
        base = SweepSpec()
        if args.spec is not None:
            base = SweepSpec.model_validate_json(args.spec.read_text(encoding="utf-8"))

        values: Dict[str, Any] = base.model_dump()
        for dest, field in SWEEP_FLAGS.items():
            value = getattr(args, dest, None)
            if value is not None:
                values[field] = value
        values["solver"] = solver_settings_from_args(args, base.solver)
        values["record_wall_time"] = base.record_wall_time or args.record_wall_time
        return SweepSpec(**values)

    def handle(self, args: argparse.Namespace) -> int:
        def action() -> str:
            spec = self.build_spec(args)
            workers = args.workers if args.workers is not None else self.default_workers
            return self.sweep_factory(workers).execute(spec, args.out).summary()

        return run_guarded(action)
