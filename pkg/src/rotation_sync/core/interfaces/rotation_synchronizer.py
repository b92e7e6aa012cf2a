"""
Interface for components that estimate absolute rotations from a view graph.
"""
from typing import Protocol, runtime_checkable

from rotation_sync.core.domain.entities.synchronization import SynchronizationResult, SyncMethod
from rotation_sync.core.domain.entities.view_graph import ViewGraph


@runtime_checkable
class RotationSynchronizer(Protocol):
    """
    Interface for rotation synchronization solvers.

    Implementations turn the relative measurements of a view graph into one
    absolute rotation per node, fixed to the gauge R_1 = I.
    """

    method: SyncMethod

    def synchronize(self, graph: ViewGraph) -> SynchronizationResult:
        """
        Estimate absolute rotations for every node of a graph.

        Args:
            graph: The view graph to solve; its ground truth, when present,
                may only be used for instrumentation

        Returns:
            The estimated rotations and any solver instrumentation

        Raises:
            DisconnectedGraphError: If the graph is not connected
        """
        ...
