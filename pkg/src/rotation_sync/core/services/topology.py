"""
Graph topology helpers backed by networkx.
"""
from typing import Iterable

import networkx as nx

from rotation_sync.core.domain.entities.view_graph import ViewGraph
from rotation_sync.core.domain.errors import DisconnectedGraphError


def build_topology(n: int, pairs: Iterable[tuple[int, int]]) -> nx.Graph:
    """
    Build an undirected networkx graph on nodes 0..n-1.

    Nodes and edges are inserted in the given order, which fixes the
    neighbor iteration order used by traversals.
    """
    topology = nx.Graph()
    topology.add_nodes_from(range(n))
    topology.add_edges_from(pairs)
    return topology


def view_graph_topology(graph: ViewGraph) -> nx.Graph:
    """The undirected topology of a view graph, edges in sorted order."""
    return build_topology(graph.n, ((edge.i, edge.j) for edge in graph.edges))


def is_connected(graph: ViewGraph) -> bool:
    """Whether every node is reachable from every other node."""
    return bool(nx.is_connected(view_graph_topology(graph)))


def ensure_connected(graph: ViewGraph) -> None:
    """
    Raise if the view graph is not connected.

    Raises:
        DisconnectedGraphError: If the graph has several components
    """
    components = nx.number_connected_components(view_graph_topology(graph))
    if components != 1:
        raise DisconnectedGraphError(
            f"View graph with n={graph.n} has {components} connected components"
        )
