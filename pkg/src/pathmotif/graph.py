"""Immutable undirected graph with degree-ordered adjacency.

Vertices are relabelled to dense ids ``0..n-1`` *in the order* ``(degree,
original label)``. With that numbering, the total order used by the
centered sampler (lower degree first, ties broken by label) is plain
integer comparison of dense ids, and adjacency lists sorted by id are
sorted by that order as well.
"""

from __future__ import annotations

import gzip
import io
import os
from dataclasses import dataclass
from typing import IO, Iterable, Union

import numpy as np

from .errors import EdgeListParseError

__all__ = [
    "Graph",
    "LoadStats",
    "load_edge_list",
    "read_edge_list",
    "write_edge_list",
    "order_less",
    "suffix_count",
    "has_edge",
]


@dataclass(frozen=True)
class LoadStats:
    lines: int = 0
    comments: int = 0
    self_loops: int = 0
    duplicates: int = 0


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class Graph:
    """Compressed adjacency structure.

    Attributes
    ----------
    n, m : int
        Vertex and edge counts.
    degrees : ndarray[int64]
        Degree of each dense vertex id.
    indptr, indices : ndarray[int64]
        CSR adjacency; ``indices[indptr[v]:indptr[v+1]]`` is strictly
        increasing, i.e. sorted by the (degree, label) order.
    edge_u, edge_v : ndarray[int64]
        Edge endpoints with ``edge_u < edge_v`` (so ``edge_u`` precedes
        ``edge_v`` in the vertex order), sorted lexicographically.
    labels : ndarray[int64]
        Original label of each dense id.
    """

    def __init__(self, labels, edge_u, edge_v, stats: LoadStats | None = None):
        # Trusted constructor: callers pass canonical data (see from_edges).
        n = len(labels)
        self.n = int(n)
        self.m = int(len(edge_u))
        self.labels = _frozen(np.asarray(labels, dtype=np.int64))
        self.edge_u = _frozen(np.asarray(edge_u, dtype=np.int64))
        self.edge_v = _frozen(np.asarray(edge_v, dtype=np.int64))
        self.stats = stats or LoadStats()

        rows = np.concatenate([self.edge_u, self.edge_v])
        cols = np.concatenate([self.edge_v, self.edge_u])
        keys = rows * max(n, 1) + cols
        order = np.argsort(keys, kind="stable")
        self._keys = _frozen(keys[order])
        self.indices = _frozen(cols[order])
        # slot of edge e in ``indices``: as v in adj(u) at [e], as u in adj(v) at [m + e]
        slots = np.empty(2 * self.m, dtype=np.int64)
        slots[order] = np.arange(2 * self.m, dtype=np.int64)
        self._slots = _frozen(slots)
        degrees = np.bincount(rows, minlength=n).astype(np.int64)
        self.degrees = _frozen(degrees)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(degrees, out=indptr[1:])
        self.indptr = _frozen(indptr)
        self._label_index = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, pairs: Iterable, stats: LoadStats | None = None) -> "Graph":
        """Build a graph from ``(label, label)`` pairs.

        Self-loops are dropped and duplicate or reversed edges merged; the
        numbers dropped are recorded in ``graph.stats``.
        """
        if not isinstance(pairs, np.ndarray):
            pairs = list(pairs)
        arr = np.asarray(pairs, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError("edge pairs must have shape (E, 2)")
        loops = arr[:, 0] == arr[:, 1]
        arr = arr[~loops]
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        canon = np.unique(np.stack([lo, hi], axis=1), axis=0) if len(lo) else \
            np.empty((0, 2), dtype=np.int64)
        base = stats or LoadStats()
        stats = LoadStats(
            lines=base.lines,
            comments=base.comments,
            self_loops=base.self_loops + int(loops.sum()),
            duplicates=base.duplicates + int(len(lo) - len(canon)),
        )

        labels = np.unique(canon)
        dense = np.searchsorted(labels, canon)
        deg = np.bincount(dense.ravel(), minlength=len(labels))
        # rank by (degree, label); labels are already ascending
        order = np.lexsort((labels, deg))
        new_id = np.empty(len(labels), dtype=np.int64)
        new_id[order] = np.arange(len(labels), dtype=np.int64)
        a = new_id[dense[:, 0]]
        b = new_id[dense[:, 1]]
        u = np.minimum(a, b)
        v = np.maximum(a, b)
        eorder = np.lexsort((v, u))
        return cls(labels[order], u[eorder], v[eorder], stats)

    # -- queries ------------------------------------------------------------

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    def label(self, v: int) -> int:
        return int(self.labels[v])

    def index_of(self, label: int) -> int:
        """Dense id of an original vertex label."""
        if self._label_index is None:
            self._label_index = {int(x): i for i, x in enumerate(self.labels)}
        try:
            return self._label_index[int(label)]
        except KeyError:
            raise KeyError(f"no vertex with label {label}") from None

    def order_key(self, v: int) -> tuple[int, int]:
        return (int(self.degrees[v]), int(self.labels[v]))

    def order_less(self, u: int, v: int) -> bool:
        return u < v

    def suffix_count(self, u: int, v: int) -> int:
        """Number of neighbours of ``u`` that come after ``v`` in the order."""
        nb = self.neighbors(u)
        return int(len(nb) - np.searchsorted(nb, v, side="right"))

    def has_edge(self, u: int, v: int) -> bool:
        if self.degrees[u] > self.degrees[v]:
            u, v = v, u
        nb = self.neighbors(u)
        i = int(np.searchsorted(nb, v))
        return i < len(nb) and int(nb[i]) == v

    def edges(self) -> np.ndarray:
        return np.stack([self.edge_u, self.edge_v], axis=1)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and np.array_equal(self.labels, other.labels)
            and np.array_equal(self.edge_u, other.edge_u)
            and np.array_equal(self.edge_v, other.edge_v)
        )

    __hash__ = None

    # -- batched lookups used by the samplers ----------------------------------

    def has_edges(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Vectorised edge test for arrays of vertex pairs."""
        if self.m == 0:
            return np.zeros(np.shape(a), dtype=bool)
        q = np.asarray(a, dtype=np.int64) * self.n + np.asarray(b, dtype=np.int64)
        i = np.searchsorted(self._keys, q)
        np.minimum(i, len(self._keys) - 1, out=i)
        return self._keys[i] == q

    def suffix_start(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Index into ``indices`` of the first neighbour of ``u`` after ``v``."""
        q = np.asarray(u, dtype=np.int64) * self.n + np.asarray(v, dtype=np.int64)
        return np.searchsorted(self._keys, q, side="right")

    def edge_slots(self) -> tuple[np.ndarray, np.ndarray]:
        """Index into ``indices`` of ``edge_v`` in adj(``edge_u``), and of ``edge_u`` in adj(``edge_v``)."""
        return self._slots[:self.m], self._slots[self.m:]

    def position(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Index of ``v`` within the adjacency list of ``u`` (edge must exist)."""
        q = np.asarray(u, dtype=np.int64) * self.n + np.asarray(v, dtype=np.int64)
        return np.searchsorted(self._keys, q) - self.indptr[u]


def order_less(g: Graph, u: int, v: int) -> bool:
    return g.order_less(u, v)


def suffix_count(g: Graph, u: int, v: int) -> int:
    return g.suffix_count(u, v)


def has_edge(g: Graph, u: int, v: int) -> bool:
    return g.has_edge(u, v)


Source = Union[str, os.PathLike, IO[bytes], IO[str]]


def _open_text(source: Source):
    if isinstance(source, (str, os.PathLike)):
        path = os.fspath(source)
        if path.endswith(".gz"):
            return gzip.open(path, "rt"), True
        return open(path, "r"), True
    if isinstance(source, io.TextIOBase):
        return source, False
    return io.TextIOWrapper(source, encoding="utf-8"), False


def read_edge_list(lines: Iterable[str]) -> tuple[np.ndarray, LoadStats]:
    """Parse SNAP-style edge-list lines into an ``(E, 2)`` label array.

    Lines beginning with ``#`` and blank lines are skipped. Any tokens
    after the first two on a line are ignored.
    """
    first, second = [], []
    nlines = ncomments = 0
    for lineno, line in enumerate(lines, start=1):
        nlines += 1
        s = line.strip()
        if not s or s.startswith("#"):
            ncomments += 1
            continue
        parts = s.split()
        if len(parts) < 2:
            raise EdgeListParseError(lineno, line.rstrip("\n"), "expected two vertex labels")
        try:
            a = int(parts[0])
            b = int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, line.rstrip("\n"), "non-integer vertex label") from None
        if a < 0 or b < 0:
            raise EdgeListParseError(lineno, line.rstrip("\n"), "negative vertex label")
        first.append(a)
        second.append(b)
    pairs = np.empty((len(first), 2), dtype=np.int64)
    pairs[:, 0] = first
    pairs[:, 1] = second
    return pairs, LoadStats(lines=nlines, comments=ncomments)


def load_edge_list(source: Source) -> Graph:
    """Load a graph from a path (``.gz`` allowed) or an open stream."""
    fh, owned = _open_text(source)
    try:
        pairs, stats = read_edge_list(fh)
    finally:
        if owned:
            fh.close()
    return Graph.from_edges(pairs, stats)


def write_edge_list(g: Graph, dest: Union[str, os.PathLike, IO[str]]) -> None:
    """Write edges using original labels, one per line."""
    lu = g.labels[g.edge_u]
    lv = g.labels[g.edge_v]
    text = "".join(f"{a} {b}\n" for a, b in zip(lu.tolist(), lv.tolist()))
    if isinstance(dest, (str, os.PathLike)):
        with open(dest, "w") as fh:
            fh.write(text)
    else:
        dest.write(text)
