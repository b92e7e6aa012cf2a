"""
Spanning-tree propagation: the minimal synchronization solver.
"""
import networkx as nx
import numpy as np

from rotation_sync.core.domain.entities.absolute_rotations import AbsoluteRotations
from rotation_sync.core.domain.entities.view_graph import ViewGraph
from rotation_sync.core.services.topology import ensure_connected, view_graph_topology


def spanning_tree_solve(graph: ViewGraph) -> AbsoluteRotations:
    """
    Propagate rotations along a breadth-first tree rooted at node 0.

    The root is fixed to the identity and each child i of parent j gets
    R_i = R̂_ij·R_j. Neighbors are visited in sorted edge order, so the result
    depends only on the graph.

    Raises:
        DisconnectedGraphError: If some node cannot be reached from the root
    """
    ensure_connected(graph)
    measurements = {(edge.i, edge.j): edge.rotation.matrix for edge in graph.edges}

    def relative(i: int, j: int) -> np.ndarray:
        if i < j:
            return measurements[(i, j)]
        return measurements[(j, i)].T

    rotations = [np.eye(3)] * graph.n
    for parent, child in nx.bfs_edges(view_graph_topology(graph), source=0):
        rotations[child] = relative(child, parent) @ rotations[parent]
    return AbsoluteRotations.from_matrices(rotations)
