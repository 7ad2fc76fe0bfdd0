"""Error bars from inverting the KL-divergence form of the Chernoff bound.

For a binomial observation ``r`` successes in ``k`` trials (``alpha =
r/k``), the interval ``[p_l, p_u]`` holds exactly the ``p`` for which
``exp(-k * D(alpha, p)) >= delta``, where ``D`` is the Bernoulli KL
divergence. Estimates of the form ``(count/k) * K`` inherit the interval
scaled by ``K``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ProvenanceError
from .estimate import Estimate

__all__ = [
    "BinomialObservation",
    "ConfidenceInterval",
    "MotifInterval",
    "kl_divergence",
    "invert_bounds",
    "interval_for_motif",
    "interval_for_c1",
    "motif_intervals",
]

TOL = 1e-12
MAX_ITER = 200


@dataclass(frozen=True)
class BinomialObservation:
    k: int
    r: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if not 0 <= self.r <= self.k:
            raise ValueError("need 0 <= r <= k")

    @property
    def alpha(self) -> float:
        return self.r / self.k


@dataclass(frozen=True)
class ConfidenceInterval:
    lower: float
    upper: float
    delta: float

    def __contains__(self, p) -> bool:
        return self.lower <= p <= self.upper

    @property
    def width(self) -> float:
        return self.upper - self.lower


@dataclass(frozen=True)
class MotifInterval:
    """Scaled interval for one motif estimate, tagged with its run."""

    motif: int
    estimate: float
    lower: float
    upper: float
    delta: float
    sampler: str
    k: int
    total: int

    @property
    def error(self) -> float:
        """Wider of the two one-sided deviations from the estimate."""
        return max(self.estimate - self.lower, self.upper - self.estimate)


def _xlogy(x: float, y: float) -> float:
    if x == 0.0:
        return 0.0
    if y == 0.0:
        return -math.inf
    return x * math.log(y)


def kl_divergence(a: float, b: float) -> float:
    """``D(a, b)`` between Bernoulli(a) and Bernoulli(b), with 0 ln 0 = 0."""
    if not 0.0 <= a <= 1.0 or not 0.0 <= b <= 1.0:
        raise ValueError("arguments must lie in [0, 1]")
    if a == b:
        return 0.0
    return (_xlogy(a, a) - _xlogy(a, b)) + (_xlogy(1 - a, 1 - a) - _xlogy(1 - a, 1 - b))


def _bisect(f, lo: float, hi: float) -> float:
    """Root of ``f`` on ``[lo, hi]``, where ``f(lo)`` and ``f(hi)`` differ in
    sign. Halves until the bracket cannot shrink further in double precision
    (well inside ``TOL``) or ``MAX_ITER`` steps."""
    lo_positive = f(lo) > 0
    for _ in range(MAX_ITER):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if (f(mid) > 0) == lo_positive:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def invert_bounds(obs: BinomialObservation, delta: float) -> ConfidenceInterval:
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must be in (0, 1)")
    k = obs.k
    alpha = obs.alpha
    level = math.log(1.0 / delta) / k  # D(alpha, p) at the endpoints

    def f(p):
        return kl_divergence(alpha, p) - level

    if obs.r == 0:
        lower = 0.0
        upper = 1.0 - delta ** (1.0 / k)
    elif obs.r == k:
        lower = delta ** (1.0 / k)
        upper = 1.0
    else:
        lower = _bisect(f, 0.0, alpha)
        upper = _bisect(f, alpha, 1.0)
    return ConfidenceInterval(lower, upper, delta)


def interval_for_motif(est: Estimate, motif: int, delta: float) -> MotifInterval:
    if motif not in est.counts:
        raise ValueError(f"{est.sampler} estimate has no raw count for motif {motif}")
    ci = invert_bounds(BinomialObservation(est.k, est.counts[motif]), delta)
    scale = est.scales[motif]
    return MotifInterval(
        motif=motif,
        estimate=est.estimates[motif],
        lower=ci.lower * scale,
        upper=ci.upper * scale,
        delta=delta,
        sampler=est.sampler,
        k=est.k,
        total=est.total,
    )


def interval_for_c1(est: Estimate, i3: MotifInterval, i5: MotifInterval,
                    i6: MotifInterval) -> MotifInterval:
    """3-star interval: the errors on C3, 2*C5 and 4*C6 added up."""
    if est.sampler != "basic" or 1 not in est.estimates:
        raise ProvenanceError("3-star interval needs a basic-sampler estimate")
    for want, iv in ((3, i3), (5, i5), (6, i6)):
        if (iv.motif != want or iv.sampler != est.sampler or iv.k != est.k
                or iv.total != est.total or iv.estimate != est.estimates[want]):
            raise ProvenanceError(f"interval for motif {iv.motif} is not from this run")
    if not i3.delta == i5.delta == i6.delta:
        raise ProvenanceError("component intervals use different delta")
    err = i3.error + 2 * i5.error + 4 * i6.error
    c1 = est.estimates[1]
    return MotifInterval(
        motif=1,
        estimate=c1,
        lower=min(c1, max(0.0, c1 - err)),
        upper=c1 + err,
        delta=i3.delta,
        sampler=est.sampler,
        k=est.k,
        total=est.total,
    )


def motif_intervals(est: Estimate, delta: float) -> dict:
    """Intervals for every motif the estimate carries."""
    out = {i: interval_for_motif(est, i, delta) for i in sorted(est.counts)}
    if est.sampler == "basic":
        out[1] = interval_for_c1(est, out[3], out[5], out[6])
    return dict(sorted(out.items()))
