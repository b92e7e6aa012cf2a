"""
Helpers shared by the command-line controllers: common flags and error translation.
"""
import argparse
import logging
import sys
from typing import Any, Callable, Dict, Iterable

from rotation_sync.adapters.cli.exit_codes import ExitCode, exit_code_for
from rotation_sync.application.dtos.solve_dto import SolverSettingsDTO
from rotation_sync.core.domain.entities.factorization import LossKind

logger = logging.getLogger(__name__)

# flag destination -> SolverSettingsDTO field
SOLVER_FLAGS = {
    "depth": "depth",
    "lr": "lr",
    "momentum": "momentum",
    "init_std": "init_std",
    "max_iters": "max_iters",
    "plateau_window": "plateau_window",
    "plateau_rel_tol": "plateau_rel_tol",
    "loss": "loss",
    "seed": "seed",
}


def add_solver_arguments(parser: argparse.ArgumentParser, exclude: Iterable[str] = ()) -> None:
    """Declare the deep matrix factorization flags; unset flags keep their defaults."""
    skipped = set(exclude)
    if "depth" not in skipped:
        parser.add_argument("--depth", type=int, help="number of factors (>= 2)")
    parser.add_argument("--lr", type=float, help="learning rate")
    parser.add_argument("--momentum", type=float, help="momentum in [0, 1)")
    parser.add_argument("--init-std", type=float, help="standard deviation of the factor entries at start")
    parser.add_argument("--max-iters", type=int, help="iteration budget")
    parser.add_argument("--plateau-window", type=int, help="iterations per plateau-test block")
    parser.add_argument("--plateau-rel-tol", type=float, help="relative loss decrease treated as a plateau")
    if "loss" not in skipped:
        parser.add_argument("--loss", choices=[k.value for k in LossKind], help="completion loss")
    if "seed" not in skipped:
        parser.add_argument("--seed", type=int, help="factor initialization seed")


def solver_settings_from_args(args: argparse.Namespace,
                              base: SolverSettingsDTO | None = None) -> SolverSettingsDTO:
    """Overlay the solver flags that were given on top of ``base``."""
    values: Dict[str, Any] = base.model_dump() if base is not None else {}
    for dest, field in SOLVER_FLAGS.items():
        value = getattr(args, dest, None)
        if value is not None:
            values[field] = value
    return SolverSettingsDTO(**values)


def run_guarded(action: Callable[[], str]) -> int:
    """
    Run a command body, print its summary on stdout and translate failures.

    Every failure becomes a one-line message on stderr and the published
    exit code of its error class.
    """
    try:
        summary = action()
    except Exception as e:
        code = exit_code_for(e)
        if code is ExitCode.UNEXPECTED:
            logger.exception(f"Unexpected error: {e}")
        else:
            logger.debug(f"Command failed with {type(e).__name__}", exc_info=True)
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return int(code)
    print(summary)
    return int(ExitCode.OK)
