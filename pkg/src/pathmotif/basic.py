"""Uniform 3-path sampling and the unbiased estimator built on it."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoPathsError
from .estimate import TRIANGLE, Estimate, as_source, tally
from .graph import Graph
from .motifs import Motif, PATHS_IN, check_u64, classify_four, star_count
from .sampling import DiscreteDistribution, RandomSource

__all__ = [
    "BasicWeights",
    "PathSample",
    "BasicSampler",
    "build_basic_weights",
    "sample_three_path",
    "estimate_basic",
]


@dataclass(frozen=True)
class BasicWeights:
    """Per-edge 3-path counts ``(d_u - 1)(d_v - 1)`` and their exact sum."""

    tau: np.ndarray
    W: int


@dataclass(frozen=True)
class PathSample:
    """One sampler outcome ``a - u - v - b`` with middle edge ``(u, v)``.

    ``a == b`` means the outcome is a triangle.
    """

    a: int
    u: int
    v: int
    b: int
    motif: Motif

    @property
    def edges(self):
        return ((self.a, self.u), (self.u, self.v), (self.v, self.b))

    @property
    def vertices(self):
        return tuple(dict.fromkeys((self.a, self.u, self.v, self.b)))

    @property
    def is_triangle(self) -> bool:
        return self.a == self.b


def build_basic_weights(g: Graph) -> BasicWeights:
    du = g.degrees[g.edge_u] - 1
    dv = g.degrees[g.edge_v] - 1
    tau = du * dv
    if len(tau) and int(tau.max()) * len(tau) >= 2**62:
        W = sum(int(x) for x in tau.tolist())
    else:
        W = int(tau.sum())
    tau.setflags(write=False)
    return BasicWeights(tau, check_u64(W, "W"))


def classify_paths(g: Graph, a, u, v, b) -> np.ndarray:
    """Motif codes for sampled 3-paths; triangles get ``TRIANGLE``.

    The three path edges are known, so only the pairs ``(a, v)``,
    ``(u, b)`` and ``(a, b)`` need testing.
    """
    tri = a == b
    av = g.has_edges(a, v)
    ub = g.has_edges(u, b)
    ab = g.has_edges(a, b) & ~tri
    extra = av.astype(np.int8) + ub + ab
    codes = np.full(len(a), Motif.PATH, dtype=np.int8)
    codes[extra == 1] = np.where(ab[extra == 1], Motif.CYCLE, Motif.TAILED_TRIANGLE)
    codes[extra == 2] = Motif.CHORDAL_CYCLE
    codes[extra == 3] = Motif.CLIQUE
    codes[tri] = TRIANGLE
    return codes


class BasicSampler:
    """Preprocessed state for repeated 3-path sampling on one graph."""

    sampler = "basic"

    def __init__(self, g: Graph, weights: BasicWeights | None = None):
        self.g = g
        self.weights = weights if weights is not None else build_basic_weights(g)
        self.W = self.weights.W
        self.stars = star_count(g)
        self.dist = DiscreteDistribution(self.weights.tau)
        # position of each edge's other endpoint inside the adjacency lists
        slot_uv, slot_vu = g.edge_slots()
        self._pos_v_in_u = slot_uv - g.indptr[g.edge_u]
        self._pos_u_in_v = slot_vu - g.indptr[g.edge_v]

    def _draw(self, r: RandomSource, size: int):
        g = self.g
        e = self.dist.draw_many(r, size)
        u = g.edge_u[e]
        v = g.edge_v[e]
        # uniform neighbour other than the partner: draw among d-1 slots
        # and step over the partner's slot
        ja = r.integers(g.degrees[u] - 1)
        ja += ja >= self._pos_v_in_u[e]
        jb = r.integers(g.degrees[v] - 1)
        jb += jb >= self._pos_u_in_v[e]
        a = g.indices[g.indptr[u] + ja]
        b = g.indices[g.indptr[v] + jb]
        return a, u, v, b

    def batch(self, r: RandomSource, size: int) -> np.ndarray:
        a, u, v, b = self._draw(r, size)
        return classify_paths(self.g, a, u, v, b)

    def sample(self, r: RandomSource) -> PathSample:
        if self.W == 0:
            raise NoPathsError("graph has no 3-paths (W = 0)")
        a, u, v, b = (int(x[0]) for x in self._draw(r, 1))
        motif = Motif.NOT_CONNECTED if a == b else classify_four(self.g, (a, u, v, b))
        return PathSample(a, u, v, b, motif)

    def estimate(self, k: int, rng=None, workers: int = 1) -> Estimate:
        if k < 1:
            raise ValueError("k must be >= 1")
        r = as_source(rng)
        scales = {i: self.W / PATHS_IN[i] for i in range(2, 7)}
        if self.W == 0:
            hits = np.zeros(8, dtype=np.int64)
            hits[0 + 1] = k
        else:
            hits = tally(self.batch, k, r, workers)
        counts = {i: int(hits[i + 1]) for i in range(2, 7)}
        est = {i: counts[i] / k * scales[i] for i in range(2, 7)}
        est[1] = self.stars - est[3] - 2 * est[5] - 4 * est[6]
        return Estimate(
            sampler=self.sampler,
            k=k,
            total=self.W,
            counts=counts,
            scales=scales,
            estimates=dict(sorted(est.items())),
            triangles=int(hits[TRIANGLE + 1]),
            stars=self.stars,
            seed=r.seed,
            workers=workers,
            uncounted=int(hits[1]),
        )


def sample_three_path(g: Graph, bw: BasicWeights | None = None, r=None,
                      sampler: BasicSampler | None = None) -> PathSample:
    """Draw one outcome; every 3-path has probability exactly ``1/W``."""
    sampler = sampler or BasicSampler(g, bw)
    return sampler.sample(as_source(r))


def estimate_basic(g: Graph, k: int, rng=None, workers: int = 1) -> Estimate:
    return BasicSampler(g).estimate(k, rng, workers)
