"""Centered 3-path sampling for the 4-cycle based motifs (4, 5, 6).

A 3-path ``t - u - v - w`` is centered when ``v`` precedes ``t``, ``u``
precedes ``w`` and ``(t, w)`` is an edge. Every induced 4-cycle and
chordal-4-cycle holds exactly one centered 3-path, a 4-clique holds three.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basic import PathSample
from .errors import NoPathsError
from .estimate import TRIANGLE, Estimate, as_source, tally
from .graph import Graph
from .motifs import Motif, check_u64
from .sampling import DiscreteDistribution, RandomSource

__all__ = [
    "CENTERED_IN",
    "CenteredWeights",
    "CenteredSampler",
    "build_centered_weights",
    "sample_centered",
    "is_centered",
    "estimate_centered",
    "classify_centered",
]

# centered 3-paths contained in each cycle-based motif
CENTERED_IN = {4: 1, 5: 1, 6: 3}


@dataclass(frozen=True)
class CenteredWeights:
    """Per edge ``(u, v)``: ``L_uv`` neighbours of ``u`` after ``v``,
    ``L_vu`` neighbours of ``v`` after ``u``, their product ``lam`` and the
    exact total ``Lambda``. ``start_u``/``start_v`` index the first such
    neighbour in ``g.indices``."""

    lam: np.ndarray
    Lambda: int
    L_uv: np.ndarray
    L_vu: np.ndarray
    start_u: np.ndarray
    start_v: np.ndarray


def build_centered_weights(g: Graph) -> CenteredWeights:
    u, v = g.edge_u, g.edge_v
    # neighbours after v in adj(u) start right past v's own slot
    slot_uv, slot_vu = g.edge_slots()
    start_u = slot_uv + 1
    start_v = slot_vu + 1
    L_uv = g.indptr[u + 1] - start_u
    L_vu = g.indptr[v + 1] - start_v
    lam = L_uv * L_vu
    if len(lam) and int(lam.max()) * len(lam) >= 2**62:
        Lambda = sum(int(x) for x in lam.tolist())
    else:
        Lambda = int(lam.sum())
    for a in (lam, L_uv, L_vu, start_u, start_v):
        a.setflags(write=False)
    return CenteredWeights(lam, check_u64(Lambda, "Lambda"), L_uv, L_vu, start_u, start_v)


def classify_centered(g: Graph, t, u, v, w) -> np.ndarray:
    """Motif codes for centered-sampler outcomes.

    Outcomes that are not centered (triangle, or no closing edge) get
    ``TRIANGLE`` / 0; centered ones are classified by their chords.
    """
    tri = t == w
    closed = g.has_edges(t, w) & ~tri
    chords = g.has_edges(t, v).astype(np.int8) + g.has_edges(u, w)
    codes = np.where(closed, Motif.CYCLE + chords, 0).astype(np.int8)
    codes[tri] = TRIANGLE
    return codes


class CenteredSampler:
    sampler = "centered"

    def __init__(self, g: Graph, weights: CenteredWeights | None = None):
        self.g = g
        self.weights = weights if weights is not None else build_centered_weights(g)
        self.Lambda = self.weights.Lambda
        self.dist = DiscreteDistribution(self.weights.lam)

    def _draw(self, r: RandomSource, size: int):
        g, cw = self.g, self.weights
        e = self.dist.draw_many(r, size)
        t = g.indices[cw.start_u[e] + r.integers(cw.L_uv[e])]
        w = g.indices[cw.start_v[e] + r.integers(cw.L_vu[e])]
        return t, g.edge_u[e], g.edge_v[e], w

    def batch(self, r: RandomSource, size: int) -> np.ndarray:
        return classify_centered(self.g, *self._draw(r, size))

    def sample(self, r: RandomSource) -> PathSample:
        if self.Lambda == 0:
            raise NoPathsError("graph has no centered candidates (Lambda = 0)")
        t, u, v, w = (int(x[0]) for x in self._draw(r, 1))
        code = int(classify_centered(self.g, *(np.array([x]) for x in (t, u, v, w)))[0])
        return PathSample(t, u, v, w, Motif(max(code, 0)))

    def estimate(self, k: int, rng=None, workers: int = 1) -> Estimate:
        if k < 1:
            raise ValueError("k must be >= 1")
        r = as_source(rng)
        scales = {i: self.Lambda / CENTERED_IN[i] for i in (4, 5, 6)}
        if self.Lambda == 0:
            hits = np.zeros(8, dtype=np.int64)
            hits[1] = k
        else:
            hits = tally(self.batch, k, r, workers)
        counts = {i: int(hits[i + 1]) for i in (4, 5, 6)}
        return Estimate(
            sampler=self.sampler,
            k=k,
            total=self.Lambda,
            counts=counts,
            scales=scales,
            estimates={i: counts[i] / k * scales[i] for i in (4, 5, 6)},
            triangles=int(hits[TRIANGLE + 1]),
            seed=r.seed,
            workers=workers,
            uncounted=int(hits[1]),
        )


def sample_centered(g: Graph, cw: CenteredWeights | None = None, r=None,
                    sampler: CenteredSampler | None = None) -> PathSample:
    """Draw one outcome; every centered 3-path has probability ``1/Lambda``.

    The returned sample is ``t - u - v - w`` with ``t = a`` and ``w = b``;
    its ``motif`` is the induced cycle-based motif when the outcome is
    centered and ``NOT_CONNECTED`` otherwise.
    """
    sampler = sampler or CenteredSampler(g, cw)
    return sampler.sample(as_source(r))


def is_centered(g: Graph, p: PathSample) -> bool:
    t, u, v, w = p.a, p.u, p.v, p.b
    if len({t, u, v, w}) < 4:
        return False
    return g.order_less(v, t) and g.order_less(u, w) and g.has_edge(t, w)


def estimate_centered(g: Graph, k: int, rng=None, workers: int = 1) -> Estimate:
    return CenteredSampler(g).estimate(k, rng, workers)
