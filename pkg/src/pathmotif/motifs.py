"""The six connected 4-vertex motifs and induced/vanilla count conversion.

Motifs are numbered 1..6: 3-star, 3-path, tailed-triangle, 4-cycle,
chordal-4-cycle, 4-clique. ``Motif.NOT_CONNECTED`` (0) covers every vertex
set that is not a connected 4-vertex induced subgraph.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import CountOverflowError, InconsistentCountsError

__all__ = [
    "Motif",
    "MOTIFS",
    "MOTIF_NAMES",
    "CONVERSION",
    "PATHS_IN",
    "MotifCounts",
    "classify_four",
    "classify_pairs",
    "mask_table",
    "induced_to_vanilla",
    "vanilla_to_induced",
    "star_count",
    "check_u64",
]

U64_MAX = 2**64 - 1


class Motif(enum.IntEnum):
    NOT_CONNECTED = 0
    STAR = 1
    PATH = 2
    TAILED_TRIANGLE = 3
    CYCLE = 4
    CHORDAL_CYCLE = 5
    CLIQUE = 6


MOTIFS = (1, 2, 3, 4, 5, 6)

MOTIF_NAMES = {
    1: "3-star",
    2: "3-path",
    3: "tailed-triangle",
    4: "4-cycle",
    5: "chordal-4-cycle",
    6: "4-clique",
}

# CONVERSION[i-1][j-1]: distinct copies of motif i inside motif j.
CONVERSION = (
    (1, 0, 1, 0, 2, 4),
    (0, 1, 2, 4, 6, 12),
    (0, 0, 1, 0, 4, 12),
    (0, 0, 0, 1, 1, 3),
    (0, 0, 0, 0, 1, 6),
    (0, 0, 0, 0, 0, 1),
)

# number of 3-paths in each motif (row 2 of CONVERSION)
PATHS_IN = {j: CONVERSION[1][j - 1] for j in MOTIFS}


def check_u64(value: int, what: str = "count") -> int:
    value = int(value)
    if value < 0 or value > U64_MAX:
        raise CountOverflowError(f"{what} {value} outside unsigned 64-bit range")
    return value


@dataclass(frozen=True)
class MotifCounts:
    """Six exact counts, indexed by motif number, in an explicit basis."""

    values: tuple
    basis: str

    def __post_init__(self):
        if self.basis not in ("induced", "vanilla"):
            raise ValueError(f"unknown basis {self.basis!r}")
        vals = tuple(check_u64(v, f"{self.basis} count") for v in self.values)
        if len(vals) != 6:
            raise ValueError("MotifCounts needs exactly six values")
        object.__setattr__(self, "values", vals)

    def __getitem__(self, motif: int) -> int:
        if not 1 <= motif <= 6:
            raise IndexError(f"motif {motif} not in 1..6")
        return self.values[motif - 1]

    def as_dict(self) -> dict:
        return {i: self.values[i - 1] for i in MOTIFS}

    @classmethod
    def zeros(cls, basis: str) -> "MotifCounts":
        return cls((0,) * 6, basis)


def classify_pairs(present: Sequence[bool]) -> Motif:
    """Classify 4 vertices from the presence of their 6 pairwise edges.

    ``present`` is ordered as ``combinations(range(4), 2)``.
    """
    deg = [0, 0, 0, 0]
    e = 0
    for (a, b), p in zip(combinations(range(4), 2), present):
        if p:
            e += 1
            deg[a] += 1
            deg[b] += 1
    deg.sort(reverse=True)
    if e == 6:
        return Motif.CLIQUE
    if e == 5:
        return Motif.CHORDAL_CYCLE
    if e == 4:
        if deg == [2, 2, 2, 2]:
            return Motif.CYCLE
        if deg == [3, 2, 2, 1]:
            return Motif.TAILED_TRIANGLE
        return Motif.NOT_CONNECTED
    if e == 3:
        if deg == [3, 1, 1, 1]:
            return Motif.STAR
        if deg == [2, 2, 1, 1]:
            return Motif.PATH
    # triangle plus isolated vertex, or too few edges
    return Motif.NOT_CONNECTED


def mask_table() -> np.ndarray:
    """Motif class for every 6-bit edge mask (bit k = k-th vertex pair)."""
    table = np.zeros(64, dtype=np.int8)
    for mask in range(64):
        table[mask] = classify_pairs([(mask >> k) & 1 for k in range(6)])
    return table


def classify_four(g, s: Iterable[int]) -> Motif:
    """Motif induced by the vertex set ``s`` in graph ``g``."""
    verts = sorted(set(int(x) for x in s))
    if len(verts) < 4:
        return Motif.NOT_CONNECTED
    if len(verts) > 4:
        raise ValueError("classify_four takes at most four vertices")
    return classify_pairs([g.has_edge(a, b) for a, b in combinations(verts, 2)])


def induced_to_vanilla(c: MotifCounts) -> MotifCounts:
    if c.basis != "induced":
        raise ValueError("expected induced counts")
    out = []
    for i in range(6):
        out.append(sum(CONVERSION[i][j] * c.values[j] for j in range(6)))
    return MotifCounts(tuple(check_u64(x, "vanilla count") for x in out), "vanilla")


def vanilla_to_induced(nv: MotifCounts) -> MotifCounts:
    """Back-substitute through the unit upper-triangular conversion matrix."""
    if nv.basis != "vanilla":
        raise ValueError("expected vanilla counts")
    c = [0] * 6
    for i in range(5, -1, -1):
        x = nv.values[i] - sum(CONVERSION[i][j] * c[j] for j in range(i + 1, 6))
        if x < 0:
            raise InconsistentCountsError(
                f"vanilla counts not realizable: induced {MOTIF_NAMES[i + 1]} would be {x}"
            )
        c[i] = x
    return MotifCounts(tuple(c), "induced")


def star_count(g) -> int:
    """Vanilla 3-star count, the sum over vertices of C(degree, 3)."""
    if g.n == 0:
        return 0
    hist = np.bincount(g.degrees)
    total = 0
    for d in np.nonzero(hist)[0].tolist():
        if d >= 3:
            total += int(hist[d]) * (d * (d - 1) * (d - 2) // 6)
    return check_u64(total, "3-star count")
