"""
Main entry point for the rotation synchronization tool.
This file orchestrates the setup of the application using clean architecture principles.
"""
import logging
import os
import sys

from rotation_sync import __version__
from rotation_sync.adapters.cli.argparse_adapter import ArgparseAdapter
from rotation_sync.adapters.cli.solve_controller import EvalController, SolveController
from rotation_sync.adapters.cli.sweep_controller import SweepController
from rotation_sync.adapters.cli.synth_controller import SynthController
from rotation_sync.adapters.reporting.csv_run_record_writer import CsvRunRecordWriter
from rotation_sync.adapters.storage.text_rotation_store import TextRotationStore
from rotation_sync.adapters.storage.view_graph_store import SuffixDispatchingViewGraphStore
from rotation_sync.application.interfaces.command_line_interface import CommandLineInterface
from rotation_sync.application.use_cases.evaluate_solution import EvaluateSolution
from rotation_sync.application.use_cases.generate_synthetic_instance import GenerateSyntheticInstance
from rotation_sync.application.use_cases.run_sweep import RunSweep
from rotation_sync.application.use_cases.solve_instance import SolveInstance


def configure_logging() -> None:
    """Configure root logging from ROTSYNC_LOG_LEVEL; logs go to stderr."""
    level_name = os.environ.get("ROTSYNC_LOG_LEVEL", "INFO").upper()
    logging.basicConfig(
        level=getattr(logging, level_name, logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    )


def default_workers() -> int:
    """Sweep worker count from ROTSYNC_WORKERS, else the CPU count."""
    value = os.environ.get("ROTSYNC_WORKERS")
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            logging.getLogger(__name__).warning(f"Ignoring invalid ROTSYNC_WORKERS={value!r}")
    return os.cpu_count() or 1


def create_app() -> CommandLineInterface:
    """Create and configure the command-line application."""
    cli = ArgparseAdapter(
        prog="rotsync",
        description=f"Rotation synchronization by deep matrix factorization (version {__version__})",
    )

    # Adapters
    rotation_store = TextRotationStore()
    view_graph_store = SuffixDispatchingViewGraphStore(rotation_store)
    record_writer = CsvRunRecordWriter()

    # Use cases
    generate_use_case = GenerateSyntheticInstance(view_graph_store)
    solve_use_case = SolveInstance(view_graph_store, rotation_store, record_writer)
    evaluate_use_case = EvaluateSolution(rotation_store)

    def sweep_factory(workers: int) -> RunSweep:
        return RunSweep(record_writer, workers=workers)

    # Controllers only talk to the application layer
    synth_controller = SynthController(generate_use_case)
    solve_controller = SolveController(solve_use_case)
    eval_controller = EvalController(evaluate_use_case)
    sweep_controller = SweepController(sweep_factory, default_workers())

    cli.register_command(
        "synth", synth_controller.handle,
        help_text="generate a synthetic view graph and its ground truth",
        configure=SynthController.configure,
    )
    cli.register_command(
        "solve", solve_controller.handle,
        help_text="estimate absolute rotations of a view graph",
        configure=SolveController.configure,
    )
    cli.register_command(
        "eval", eval_controller.handle,
        help_text="compare a rotation file against a ground truth",
        configure=EvalController.configure,
    )
    cli.register_command(
        "sweep", sweep_controller.handle,
        help_text="run a grid of synthetic experiments into a CSV file",
        configure=SweepController.configure,
    )
    return cli


def start_application() -> None:
    """Run the command-line application and exit with its status."""
    configure_logging()
    app = create_app()
    sys.exit(app.run())


if __name__ == "__main__":
    start_application()
