"""
Synthetic view graph generation on Erdős–Rényi graphs.
"""
import logging
import math

import networkx as nx
import numpy as np

from rotation_sync.core.domain.config import CONNECTIVITY_MAX_ATTEMPTS
from rotation_sync.core.domain.entities.rotation import Rotation, SamplingMode
from rotation_sync.core.domain.entities.view_graph import Edge, SyntheticSpec, ViewGraph
from rotation_sync.core.domain.errors import RejectionLimitError
from rotation_sync.core.services.so3 import random_perturbation, random_rotation
from rotation_sync.core.services.topology import build_topology

logger = logging.getLogger(__name__)


def outlier_count(fraction: float, edge_count: int) -> int:
    """Number of corrupted edges: fraction·|E| rounded half up."""
    return int(math.floor(fraction * edge_count + 0.5))


def sample_connected_pairs(n: int, edge_prob: float,
                           rng: np.random.Generator) -> list[tuple[int, int]]:
    """
    Draw Erdős–Rényi edges, resampling the whole graph until it is connected.

    Args:
        n: Number of nodes
        edge_prob: Probability that each unordered pair is kept
        rng: Random generator

    Returns:
        list[tuple[int, int]]: Sorted (i, j) pairs with i < j

    Raises:
        RejectionLimitError: If no connected graph appears within the attempt cap
    """
    rows, cols = np.triu_indices(n, k=1)
    for attempt in range(1, CONNECTIVITY_MAX_ATTEMPTS + 1):
        keep = rng.random(rows.size) < edge_prob
        pairs = [(int(i), int(j)) for i, j in zip(rows[keep], cols[keep])]
        if nx.is_connected(build_topology(n, pairs)):
            if attempt > 1:
                logger.debug(f"Connected graph found after {attempt} attempts")
            return pairs
    raise RejectionLimitError(
        f"No connected graph with n={n}, p={edge_prob} after "
        f"{CONNECTIVITY_MAX_ATTEMPTS} attempts; increase the edge probability"
    )


def generate(spec: SyntheticSpec) -> ViewGraph:
    """
    Generate a synthetic rotation synchronization instance.

    Ground truth is drawn from uniform Euler angles. A fraction of the edges,
    chosen uniformly without replacement, is replaced by random rotations;
    every other edge measures R_i·R_jᵀ·N_ij with N_ij a random perturbation
    of standard deviation ``noise_sigma``. The seed fully determines the
    output.

    Args:
        spec: Generation parameters

    Returns:
        ViewGraph: A connected graph carrying its ground truth
    """
    rng = np.random.default_rng(spec.seed)
    ground_truth = tuple(
        random_rotation(rng, SamplingMode.EULER_UNIFORM) for _ in range(spec.n)
    )
    pairs = sample_connected_pairs(spec.n, spec.edge_prob, rng)

    corrupted = outlier_count(spec.outlier_fraction, len(pairs))
    outliers = set(rng.choice(len(pairs), size=corrupted, replace=False).tolist())

    edges = []
    for index, (i, j) in enumerate(pairs):
        if index in outliers:
            measurement = random_rotation(rng, spec.outlier_mode)
        else:
            noise = random_perturbation(spec.noise_sigma, rng)
            measurement = Rotation(
                ground_truth[i].matrix @ ground_truth[j].matrix.T @ noise.matrix
            )
        edges.append(Edge(i, j, measurement, is_outlier=index in outliers))

    logger.info(
        f"Generated view graph: n={spec.n}, |E|={len(edges)}, outliers={corrupted}, "
        f"seed={spec.seed}"
    )
    return ViewGraph(n=spec.n, edges=tuple(edges), ground_truth=ground_truth)
