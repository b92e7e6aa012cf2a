"""
View Graph Store Interface.

This interface defines the contract for persisting view graphs and rotation lists.
"""
from pathlib import Path
from typing import List, Mapping, Optional, Protocol, runtime_checkable

from rotation_sync.core.domain.entities.absolute_rotations import AbsoluteRotations
from rotation_sync.core.domain.entities.view_graph import ViewGraph


@runtime_checkable
class ViewGraphStoreInterface(Protocol):
    """
    Interface for storage adapters that read and write view graphs.
    """

    def save_graph(self, graph: ViewGraph, path: Path) -> List[Path]:
        """
        Write a view graph, and its ground truth when it has one.

        Args:
            graph: The graph to write
            path: Destination of the edge list

        Returns:
            List[Path]: Every file written, edge list first
        """
        ...

    def load_graph(self, path: Path, ground_truth_path: Optional[Path] = None) -> ViewGraph:
        """
        Read a view graph.

        Args:
            path: Edge list to read
            ground_truth_path: Optional ground-truth rotation file

        Returns:
            ViewGraph: The parsed graph

        Raises:
            ParseError: If a file is malformed
            GraphInvariantError: If a well-formed file describes an invalid graph,
                such as a non-rotation block, a duplicate edge or an out-of-range node
        """
        ...

    def ground_truth_path_for(self, path: Path) -> Path:
        """
        Where ``save_graph`` puts the ground truth of an edge list at ``path``.
        """
        ...


@runtime_checkable
class RotationStoreInterface(Protocol):
    """
    Interface for storage adapters that read and write absolute rotation lists.
    """

    def save_rotations(self, rotations: AbsoluteRotations, path: Path,
                       metadata: Optional[Mapping[str, object]] = None) -> Path:
        """
        Write one rotation per node, with optional metadata comments.

        Returns:
            Path: The file written
        """
        ...

    def load_rotations(self, path: Path) -> AbsoluteRotations:
        """
        Read a rotation list.

        Raises:
            ParseError: If the file is malformed
            GraphInvariantError: If a node is out of range, repeated, or not a rotation
        """
        ...
