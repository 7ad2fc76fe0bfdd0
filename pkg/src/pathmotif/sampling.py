"""Seeded random streams and alias-method sampling over integer weights."""

from __future__ import annotations

import secrets

import numpy as np

from .errors import EmptyDistributionError

__all__ = ["RandomSource", "DiscreteDistribution", "build", "draw", "new_seed"]


def new_seed() -> int:
    return secrets.randbits(64)


class RandomSource:
    """A reproducible random stream identified by ``(seed, stream)``.

    Backed by numpy's counter-based Philox generator. Streams with the same
    seed but different ``stream`` keys are statistically independent.
    """

    def __init__(self, seed: int | None = None, stream: tuple = ()):
        if seed is None:
            seed = new_seed()
        self.seed = int(seed)
        if isinstance(stream, int):
            stream = (stream,)
        self.stream = tuple(int(s) for s in stream)
        ss = np.random.SeedSequence(self.seed, spawn_key=self.stream)
        self.generator = np.random.Generator(np.random.Philox(ss))

    def spawn(self, index: int) -> "RandomSource":
        return RandomSource(self.seed, self.stream + (int(index),))

    def integers(self, high, size=None):
        """Uniform integers in ``[0, high)``; ``high`` may be an array."""
        return self.generator.integers(0, high, size=size)

    def random(self, size=None):
        return self.generator.random(size)

    def __repr__(self):
        return f"RandomSource(seed={self.seed}, stream={self.stream})"


class DiscreteDistribution:
    """Walker/Vose alias table over non-negative integer weights.

    Cell thresholds are derived in exact integer arithmetic (each weight is
    scaled by the table size and compared against the exact total), so the
    only rounding is the final conversion of each threshold to a float.
    """

    def __init__(self, weights):
        w = np.asarray(weights, dtype=np.int64)
        if w.ndim != 1:
            raise ValueError("weights must be one-dimensional")
        if (w < 0).any():
            raise ValueError("weights must be non-negative")
        self.weights = w
        self.weights.setflags(write=False)
        self.total = _exact_sum(w)
        self.size = len(w)
        self.prob = np.ones(self.size, dtype=np.float64)
        self.alias = np.arange(self.size, dtype=np.int64)
        if self.total > 0:
            self._build()
        self.prob.setflags(write=False)
        self.alias.setflags(write=False)

    @property
    def empty(self) -> bool:
        return self.total == 0

    def _build(self):
        n = self.size
        total = self.total
        if total * n >= 2**62:
            return self._build_big()
        # scaled[i] = w_i * n; a cell is full when its scaled weight reaches total.
        # Heavy cells donate in order: cumulative excess E against cumulative
        # deficit A decides each light cell's donor, and a heavy cell that runs
        # dry becomes a light cell aliased to the next heavy one.
        scaled = self.weights * n
        light = np.flatnonzero(scaled < total)
        heavy = np.flatnonzero(scaled >= total)
        deficit = total - scaled[light]
        A = np.cumsum(deficit)
        E = np.cumsum(scaled[heavy] - total)
        prob = self.prob
        alias = self.alias
        if len(light):
            donor = np.searchsorted(E, A - deficit, side="left")
            prob[light] = scaled[light] / total
            alias[light] = heavy[donor]
            dry = np.flatnonzero(E < A[-1])
            first_over = np.searchsorted(A, E[dry], side="right")
            prob[heavy[dry]] = (total + E[dry] - A[first_over]) / total
            alias[heavy[dry]] = heavy[dry + 1]

    def _build_big(self):
        """Same table via a scalar loop on Python ints, for totals past int64."""
        n = self.size
        total = self.total
        scaled = [int(x) * n for x in self.weights.tolist()]
        small = [i for i, s in enumerate(scaled) if s < total]
        large = [i for i, s in enumerate(scaled) if s >= total]
        prob = self.prob.tolist()
        alias = self.alias.tolist()
        while small and large:
            s = small.pop()
            g = large[-1]
            prob[s] = scaled[s] / total
            alias[s] = g
            scaled[g] -= total - scaled[s]
            if scaled[g] < total:
                large.pop()
                small.append(g)
        # any leftovers are full cells (exact arithmetic leaves none short)
        self.prob[:] = prob
        self.alias[:] = alias

    def draw(self, r: RandomSource) -> int:
        return int(self.draw_many(r, 1)[0])

    def draw_many(self, r: RandomSource, size: int) -> np.ndarray:
        if self.empty:
            raise EmptyDistributionError("cannot draw from an all-zero distribution")
        cell = r.integers(self.size, size=size)
        coin = r.random(size)
        return np.where(coin < self.prob[cell], cell, self.alias[cell])

    def probabilities(self) -> np.ndarray:
        return self.weights / self.total if self.total else np.zeros(self.size)


def _exact_sum(w: np.ndarray) -> int:
    if len(w) == 0:
        return 0
    if int(w.max()) * len(w) < 2**62:
        return int(w.sum())
    return sum(int(x) for x in w.tolist())


def build(weights) -> DiscreteDistribution:
    return DiscreteDistribution(weights)


def draw(d: DiscreteDistribution, r: RandomSource) -> int:
    return d.draw(r)
