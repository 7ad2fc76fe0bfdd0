"""Estimate record shared by both samplers and the sampling driver."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .sampling import RandomSource

# Samples per vectorised batch; part of the determinism contract.
CHUNK = 1 << 17

# Outcome codes returned by batch samplers, besides motif numbers 1..6.
TRIANGLE = -1
UNCOUNTED = 0


@dataclass(frozen=True)
class Estimate:
    """Output of one sampler run.

    ``counts[i]`` is the number of successful trials for motif ``i`` and
    ``estimates[i] == counts[i] / k * scales[i]``. For the basic sampler,
    motif 1 is derived from the others and has no count or scale.
    """

    sampler: str
    k: int
    total: int
    counts: dict
    scales: dict
    estimates: dict
    triangles: int = 0
    stars: int | None = None
    seed: int | None = None
    workers: int = 1
    uncounted: int = field(default=0)

    @property
    def motifs(self) -> tuple:
        return tuple(sorted(self.estimates))


def as_source(rng) -> RandomSource:
    if isinstance(rng, RandomSource):
        return rng
    return RandomSource(rng)


def split_k(k: int, workers: int) -> list[int]:
    base, extra = divmod(k, workers)
    return [base + (1 if i < extra else 0) for i in range(workers)]


def tally(batch: Callable[[RandomSource, int], np.ndarray], k: int,
          rng: RandomSource, workers: int = 1) -> np.ndarray:
    """Run ``k`` trials and return outcome counts indexed by ``code + 1``.

    With several workers, worker ``i`` draws from stream ``rng.spawn(i)``
    and handles a contiguous share of ``k``; ``workers=1`` uses ``rng``
    itself.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")

    def work(r: RandomSource, share: int) -> np.ndarray:
        acc = np.zeros(8, dtype=np.int64)
        left = share
        while left > 0:
            size = min(left, CHUNK)
            codes = batch(r, size)
            acc += np.bincount(codes + 1, minlength=8)
            left -= size
        return acc

    if workers == 1:
        return work(rng, k)
    shares = split_k(k, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(work, [rng.spawn(i) for i in range(workers)], shares))
    return np.sum(parts, axis=0)
