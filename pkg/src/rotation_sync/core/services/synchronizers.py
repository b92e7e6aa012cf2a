"""
Rotation synchronizers: the deep matrix factorization pipeline and its baselines.

Each synchronizer satisfies the RotationSynchronizer interface, so use cases
can swap methods without knowing how rotations are estimated.
"""
from typing import Optional

from rotation_sync.core.domain.entities.absolute_rotations import AbsoluteRotations
from rotation_sync.core.domain.entities.factorization import SolverConfig
from rotation_sync.core.domain.entities.synchronization import SynchronizationResult, SyncMethod
from rotation_sync.core.domain.entities.view_graph import ViewGraph
from rotation_sync.core.domain.errors import InvalidConfigurationError
from rotation_sync.core.interfaces.rotation_synchronizer import RotationSynchronizer
from rotation_sync.core.services import dmf_solver
from rotation_sync.core.services.block_matrix import assemble, ground_truth_matrix
from rotation_sync.core.services.spanning_tree import spanning_tree_solve
from rotation_sync.core.services.spectral_recovery import recover, spectral_baseline
from rotation_sync.core.services.topology import ensure_connected


class DMFSynchronizer:
    """
    Complete the observed block matrix by deep matrix factorization, then
    recover rotations spectrally from the completed matrix.
    """

    method = SyncMethod.DMF

    def __init__(self, config: Optional[SolverConfig] = None):
        """
        Initialize the synchronizer.

        Args:
            config: Solver hyper-parameters, defaults when omitted
        """
        self.config = config or SolverConfig()

    def synchronize(self, graph: ViewGraph) -> SynchronizationResult:
        ensure_connected(graph)
        obs = assemble(graph)
        z_true = None
        if graph.ground_truth is not None:
            z_true = ground_truth_matrix(AbsoluteRotations(graph.ground_truth))
        report = dmf_solver.solve(obs, self.config, z_true=z_true)
        rotations = recover(report.completed, graph.n)
        return SynchronizationResult(method=self.method, rotations=rotations, solve_report=report)


class SpectralSynchronizer:
    """Eigendecomposition of the raw observed matrix, missing blocks as zeros."""

    method = SyncMethod.SPECTRAL

    def synchronize(self, graph: ViewGraph) -> SynchronizationResult:
        ensure_connected(graph)
        return SynchronizationResult(
            method=self.method,
            rotations=spectral_baseline(assemble(graph)),
        )


class SpanningTreeSynchronizer:
    """Propagation along a breadth-first spanning tree rooted at the first node."""

    method = SyncMethod.SPANNING_TREE

    def synchronize(self, graph: ViewGraph) -> SynchronizationResult:
        return SynchronizationResult(method=self.method, rotations=spanning_tree_solve(graph))


def build_synchronizer(method: SyncMethod | str,
                       config: Optional[SolverConfig] = None) -> RotationSynchronizer:
    """
    Create the synchronizer for a method name.

    Args:
        method: ``dmf``, ``spectral`` or ``spanning-tree``
        config: Solver hyper-parameters, only used by ``dmf``

    Returns:
        RotationSynchronizer: A ready-to-use synchronizer

    Raises:
        InvalidConfigurationError: If the method is unknown
    """
    try:
        method = SyncMethod(method)
    except ValueError as e:
        choices = ", ".join(m.value for m in SyncMethod)
        raise InvalidConfigurationError(f"Unknown method {method!r}; choose one of {choices}") from e

    if method is SyncMethod.DMF:
        return DMFSynchronizer(config)
    if method is SyncMethod.SPECTRAL:
        return SpectralSynchronizer()
    return SpanningTreeSynchronizer()
