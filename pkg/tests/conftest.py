"""Shared helpers for the test suite."""

import random

import pytest

from stpack.graph import Graph
from stpack.verify import random_graph


def connected_random_graph(rng: random.Random, n_lo=4, n_hi=10, p_lo=0.3, p_hi=0.9) -> Graph:
    """A seeded random connected graph; retries until connected."""
    while True:
        n = rng.randint(n_lo, n_hi)
        p = rng.uniform(p_lo, p_hi)
        g = random_graph(n, p, rng.randrange(2**31))
        if g.n >= 2 and g.is_connected():
            return g


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, [(min(u, v), max(u, v)) for u, v in outer + inner + spokes])


@pytest.fixture
def rng():
    return random.Random(20240817)
