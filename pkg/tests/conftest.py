"""
Shared fixtures for the rotation synchronization test suite.
"""
import math

import numpy as np
import pytest

from rotation_sync.core.domain.entities.absolute_rotations import AbsoluteRotations
from rotation_sync.core.domain.entities.view_graph import SyntheticSpec
from rotation_sync.core.services.so3 import random_rotation
from rotation_sync.core.services.view_graph_generator import generate


@pytest.fixture
def rng():
    """A seeded random generator."""
    return np.random.default_rng(12345)


@pytest.fixture
def random_rotations(rng):
    """Factory for n Haar-random absolute rotations."""
    def make(n: int) -> AbsoluteRotations:
        return AbsoluteRotations(tuple(random_rotation(rng) for _ in range(n)))
    return make


@pytest.fixture
def noiseless_graph():
    """A connected, noise- and outlier-free instance with 8 nodes."""
    return generate(SyntheticSpec(n=8, edge_prob=0.6, outlier_fraction=0.0, noise_sigma=0.0, seed=3))


@pytest.fixture
def noisy_graph():
    """The benchmark corruption model on a small complete graph."""
    return generate(SyntheticSpec(
        n=10, edge_prob=1.0, outlier_fraction=0.4, noise_sigma=math.radians(5.0), seed=7
    ))
