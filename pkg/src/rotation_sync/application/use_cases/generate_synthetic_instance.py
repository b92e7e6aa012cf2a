"""
Use case for generating a synthetic view graph and storing it with its ground truth.
"""
import logging
import math

from rotation_sync.application.dtos.synthesis_dto import SynthRequestDTO, SynthResponseDTO
from rotation_sync.application.interfaces.view_graph_store_interface import ViewGraphStoreInterface
from rotation_sync.core.domain.entities.view_graph import SyntheticSpec
from rotation_sync.core.services.view_graph_generator import generate

logger = logging.getLogger(__name__)


class GenerateSyntheticInstance:
    """Use case for writing a reproducible synthetic instance to disk."""

    def __init__(self, view_graph_store: ViewGraphStoreInterface):
        """
        Initialize the use case with a storage adapter.

        Args:
            view_graph_store: Store used to write the edge list and ground truth
        """
        self.view_graph_store = view_graph_store

    def execute(self, request: SynthRequestDTO) -> SynthResponseDTO:
        """
        Generate the instance described by the request and save it.

        Args:
            request: Generation parameters and output path

        Returns:
            Summary of the written instance
        """
        spec = SyntheticSpec(
            n=request.n,
            edge_prob=request.p,
            outlier_fraction=request.outliers,
            noise_sigma=math.radians(request.sigma_deg),
            seed=request.seed,
            outlier_mode=request.outlier_mode,
        )
        graph = generate(spec)
        written = self.view_graph_store.save_graph(graph, request.out_path)

        logger.info(f"Wrote synthetic instance to {written[0]}")
        return SynthResponseDTO(
            graph_path=written[0],
            ground_truth_path=written[-1],
            n=graph.n,
            n_edges=graph.edge_count,
            n_outliers=sum(1 for edge in graph.edges if edge.is_outlier),
            edge_fraction=graph.edge_fraction,
        )
