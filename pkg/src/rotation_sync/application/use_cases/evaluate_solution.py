"""
Use case for scoring stored rotations against a stored ground truth.
"""
import logging

from rotation_sync.application.dtos.solve_dto import EvaluateRequestDTO, EvaluateResponseDTO
from rotation_sync.application.interfaces.view_graph_store_interface import RotationStoreInterface
from rotation_sync.core.services.evaluation import angular_error_report

logger = logging.getLogger(__name__)


class EvaluateSolution:
    """Use case for gauge-aligned evaluation of a rotation file."""

    def __init__(self, rotation_store: RotationStoreInterface):
        """
        Initialize the use case.

        Args:
            rotation_store: Store both rotation files are read from
        """
        self.rotation_store = rotation_store

    def execute(self, request: EvaluateRequestDTO) -> EvaluateResponseDTO:
        """
        Align the estimate to the ground truth and measure per-node errors.

        Args:
            request: Paths of the estimate and the ground truth

        Returns:
            Error statistics in degrees
        """
        estimate = self.rotation_store.load_rotations(request.estimate_path)
        ground_truth = self.rotation_store.load_rotations(request.ground_truth_path)
        report = angular_error_report(estimate, ground_truth)
        logger.info(f"Evaluated {request.estimate_path}: {report}")
        return EvaluateResponseDTO(
            n=len(estimate),
            mean_err_deg=report.mean,
            median_err_deg=report.median,
            max_err_deg=report.max,
        )
