"""
Controller for the ``synth`` command.
"""
import argparse
from pathlib import Path

from rotation_sync.adapters.cli.controller_support import run_guarded
from rotation_sync.application.dtos.synthesis_dto import SynthRequestDTO
from rotation_sync.application.use_cases.generate_synthetic_instance import GenerateSyntheticInstance
from rotation_sync.core.domain.config import DEFAULT_OUTLIER_FRACTION, DEFAULT_OUTLIER_MODE
from rotation_sync.core.domain.entities.rotation import SamplingMode


class SynthController:
    """Translates ``synth`` arguments into a generation request."""

    def __init__(self, generate_use_case: GenerateSyntheticInstance):
        """
        Initialize the controller.

        Args:
            generate_use_case: The use case that generates and stores instances
        """
        self.generate_use_case = generate_use_case

    @staticmethod
    def configure(parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--n", type=int, required=True, help="number of nodes")
        parser.add_argument("--p", type=float, required=True, help="edge probability")
        parser.add_argument("--outliers", type=float, default=DEFAULT_OUTLIER_FRACTION,
                            help="fraction of edges replaced by random rotations")
        parser.add_argument("--sigma-deg", type=float, default=5.0,
                            help="noise standard deviation in degrees")
        parser.add_argument("--seed", type=int, default=0, help="generation seed")
        parser.add_argument("--outlier-mode", choices=[m.value for m in SamplingMode],
                            default=DEFAULT_OUTLIER_MODE, help="distribution of outlier rotations")
        parser.add_argument("--out", type=Path, required=True,
                            help="edge list path (.npz for the archive format)")

    def handle(self, args: argparse.Namespace) -> int:
        def action() -> str:
            request = SynthRequestDTO(
                n=args.n,
                p=args.p,
                outliers=args.outliers,
                sigma_deg=args.sigma_deg,
                seed=args.seed,
                outlier_mode=args.outlier_mode,
                out_path=args.out,
            )
            return self.generate_use_case.execute(request).summary()

        return run_guarded(action)
