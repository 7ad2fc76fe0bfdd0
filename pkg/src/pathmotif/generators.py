"""Small seeded graph generators for tests and benchmarks."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .graph import Graph

__all__ = [
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
    "erdos_renyi",
    "random_edges",
    "power_law_graph",
]


def path_graph(n: int) -> Graph:
    """Vertices labelled ``1..n``."""
    return Graph.from_edges([(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges([(i, i % n + 1) for i in range(1, n + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(list(combinations(range(1, n + 1), 2)))


def star_graph(leaves: int) -> Graph:
    """Centre labelled 0, leaves ``1..leaves``."""
    return Graph.from_edges([(0, i) for i in range(1, leaves + 1)])


def erdos_renyi(n: int, p: float, seed=None) -> Graph:
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < p
    return Graph.from_edges(np.stack([iu[keep], ju[keep]], axis=1))


def random_edges(n: int, m: int, seed=None) -> Graph:
    """About ``m`` uniform random edges on ``n`` labels (duplicates merged)."""
    rng = np.random.default_rng(seed)
    pairs = rng.integers(0, n, size=(m, 2))
    return Graph.from_edges(pairs)


def power_law_graph(n: int, m: int, exponent: float = 2.2, seed=None) -> Graph:
    """Chung-Lu style graph: endpoints drawn proportional to power-law weights.

    Heavy-tailed degrees make the centered candidate set much smaller than
    the full 3-path set.
    """
    rng = np.random.default_rng(seed)
    w = (np.arange(1, n + 1, dtype=float)) ** (-1.0 / (exponent - 1.0))
    w /= w.sum()
    pairs = rng.choice(n, size=(m, 2), p=w)
    return Graph.from_edges(pairs)
