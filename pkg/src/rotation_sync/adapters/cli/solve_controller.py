"""
Controllers for the ``solve`` and ``eval`` commands.
"""
import argparse
from pathlib import Path

from rotation_sync.adapters.cli.controller_support import (
    add_solver_arguments,
    run_guarded,
    solver_settings_from_args,
)
from rotation_sync.application.dtos.solve_dto import EvaluateRequestDTO, SolveRequestDTO
from rotation_sync.application.use_cases.evaluate_solution import EvaluateSolution
from rotation_sync.application.use_cases.solve_instance import SolveInstance
from rotation_sync.core.domain.entities.synchronization import SyncMethod


class SolveController:
    """Translates ``solve`` arguments into a solve request."""

    def __init__(self, solve_use_case: SolveInstance):
        """
        Initialize the controller.

        Args:
            solve_use_case: The use case that solves stored graphs
        """
        self.solve_use_case = solve_use_case

    @staticmethod
    def configure(parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--in", dest="input", type=Path, required=True, help="view graph file")
        parser.add_argument("--out", type=Path, required=True, help="rotation output file")
        parser.add_argument("--method", choices=[m.value for m in SyncMethod],
                            default=SyncMethod.DMF.value, help="synchronization method")
        parser.add_argument("--ground-truth", type=Path, help="ground-truth rotation file")
        parser.add_argument("--report", type=Path,
                            help="CSV file the run record is written to "
                                 "(default with a ground truth: <out>.csv)")
        parser.add_argument("--append-report", action="store_true",
                            help="append the run record instead of replacing the report")
        parser.add_argument("--record-wall-time", action="store_true",
                            help="fill the wall_s column")
        add_solver_arguments(parser)

    def handle(self, args: argparse.Namespace) -> int:
        def action() -> str:
            request = SolveRequestDTO(
                input_path=args.input,
                out_path=args.out,
                method=args.method,
                solver=solver_settings_from_args(args),
                ground_truth_path=args.ground_truth,
                report_path=args.report,
                append_report=args.append_report,
                record_wall_time=args.record_wall_time,
            )
            return self.solve_use_case.execute(request).summary()

        return run_guarded(action)


class EvalController:
    """Translates ``eval`` arguments into an evaluation request."""

    def __init__(self, evaluate_use_case: EvaluateSolution):
        """
        Initialize the controller.

        Args:
            evaluate_use_case: The use case that scores rotation files
        """
        self.evaluate_use_case = evaluate_use_case

    @staticmethod
    def configure(parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--estimate", type=Path, required=True, help="estimated rotation file")
        parser.add_argument("--ground-truth", type=Path, required=True, help="ground-truth rotation file")

    def handle(self, args: argparse.Namespace) -> int:
        def action() -> str:
            request = EvaluateRequestDTO(
                estimate_path=args.estimate,
                ground_truth_path=args.ground_truth,
            )
            return self.evaluate_use_case.execute(request).summary()

        return run_guarded(action)
