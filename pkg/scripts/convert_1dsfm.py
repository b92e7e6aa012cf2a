#!/usr/bin/env python
"""
Convert a 1DSfM scene to the rotsync edge-list format.

Reads the pairwise geometry file ``EGs.txt`` (lines ``i j R11..R33 t1 t2 t3``
with 0-based camera indices and R = R_j·R_iᵀ) and, optionally, the Bundler
reconstruction ``gt_bundle.out`` used as ground truth. Cameras missing from
the reconstruction (zero focal length) are dropped, only the largest
connected component is kept and cameras are renumbered compactly.

Usage:
    python scripts/convert_1dsfm.py EGs.txt scene.txt --bundle gt_bundle.out
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Optional

import networkx as nx
import numpy as np

from rotation_sync.adapters.storage.view_graph_store import SuffixDispatchingViewGraphStore
from rotation_sync.core.domain.entities.view_graph import Edge, ViewGraph
from rotation_sync.core.services.so3 import project_to_so3

logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


def read_edges(path: Path) -> dict[tuple[int, int], np.ndarray]:
    """Relative rotations keyed by (i, j), converted to the R_i·R_jᵀ convention."""
    edges = {}
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            tokens = line.split()
            if len(tokens) < 11:
                continue
            i, j = int(tokens[0]), int(tokens[1])
            if i == j:
                continue
            rotation = np.array([float(v) for v in tokens[2:11]]).reshape(3, 3).T
            if i > j:
                i, j, rotation = j, i, rotation.T
            edges.setdefault((i, j), rotation)
    return edges


def read_bundle_rotations(path: Path) -> dict[int, np.ndarray]:
    """World-to-camera rotations of every reconstructed Bundler camera."""
    with open(path, "r", encoding="utf-8") as handle:
        lines = [line for line in handle if not line.startswith("#")]
    num_cameras = int(lines[0].split()[0])
    rotations = {}
    for camera in range(num_cameras):
        block = lines[1 + 5 * camera: 6 + 5 * camera]
        focal = float(block[0].split()[0])
        if focal == 0.0:
            continue
        rotations[camera] = np.array([[float(v) for v in row.split()] for row in block[1:4]])
    return rotations


def build_graph(edges: dict[tuple[int, int], np.ndarray],
                truth: Optional[dict[int, np.ndarray]]) -> ViewGraph:
    """Largest connected component, renumbered, with projected measurements."""
    topology = nx.Graph()
    topology.add_edges_from(
        key for key in edges if truth is None or (key[0] in truth and key[1] in truth)
    )
    component = sorted(max(nx.connected_components(topology), key=len))
    index = {camera: position for position, camera in enumerate(component)}

    kept = [
        Edge(index[i], index[j], project_to_so3(rotation))
        for (i, j), rotation in sorted(edges.items())
        if i in index and j in index and topology.has_edge(i, j)
    ]
    ground_truth = None
    if truth is not None:
        ground_truth = [project_to_so3(truth[camera]) for camera in component]
    logger.info(f"Kept {len(component)} cameras and {len(kept)} edges")
    return ViewGraph.from_edges(len(component), kept, ground_truth)


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(description="Convert a 1DSfM scene to an edge list.")
    parser.add_argument("egs", type=Path, help="EGs.txt of the scene")
    parser.add_argument("out", type=Path, help="output edge list (.txt or .npz)")
    parser.add_argument("--bundle", type=Path, help="gt_bundle.out with reference rotations")
    args = parser.parse_args(argv)

    edges = read_edges(args.egs)
    truth = read_bundle_rotations(args.bundle) if args.bundle else None
    graph = build_graph(edges, truth)
    written = SuffixDispatchingViewGraphStore().save_graph(graph, args.out)
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
