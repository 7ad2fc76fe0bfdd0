"""Slow, independent reference computations used only by the tests.

Nothing here touches the package's conversion matrix or its vectorised
classifiers.
"""

from collections import Counter
from itertools import combinations, permutations

import networkx as nx

TEMPLATES = {
    1: [(0, 1), (0, 2), (0, 3)],
    2: [(0, 1), (1, 2), (2, 3)],
    3: [(0, 1), (1, 2), (0, 2), (2, 3)],
    4: [(0, 1), (1, 2), (2, 3), (3, 0)],
    5: [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
    6: list(combinations(range(4), 2)),
}


def _canon(edges):
    return frozenset(frozenset(e) for e in edges)


def _iso_forms():
    """Every labelled edge set on {0,1,2,3} isomorphic to each template."""
    forms = {}
    for motif, edges in TEMPLATES.items():
        for perm in permutations(range(4)):
            forms[_canon((perm[a], perm[b]) for a, b in edges)] = motif
    return forms


ISO_FORMS = _iso_forms()


def naive_class(edge_set):
    """Motif of an edge set on vertices {0,1,2,3} by template isomorphism; 0 if none."""
    return ISO_FORMS.get(_canon(edge_set), 0)


def induced_edges(adj, verts):
    idx = {v: i for i, v in enumerate(verts)}
    return [(idx[a], idx[b]) for a, b in combinations(verts, 2) if b in adj[a]]


def adjacency(g):
    adj = {v: set() for v in range(g.n)}
    for u, v in zip(g.edge_u.tolist(), g.edge_v.tolist()):
        adj[u].add(v)
        adj[v].add(u)
    return adj


PAIRS = list(combinations(range(4), 2))


def _mask_contributions(mask):
    """(induced class, vanilla Counter) for one edge pattern on 4 vertices."""
    es = [PAIRS[j] for j in range(6) if mask >> j & 1]
    vanilla = Counter()
    for r in range(3, len(es) + 1):
        for sub in combinations(es, r):
            c = naive_class(sub)
            if c:
                vanilla[c] += 1
    return naive_class(es), vanilla


def brute_induced_and_vanilla(g):
    """Induced counts by isomorphism and vanilla counts by edge-subset enumeration.

    Every 4-subset is reduced to its 6-bit edge pattern first; each distinct
    pattern is then expanded once.
    """
    adj = adjacency(g)
    masks = Counter()
    for verts in combinations(range(g.n), 4):
        mask = 0
        for j, (a, b) in enumerate(PAIRS):
            if verts[b] in adj[verts[a]]:
                mask |= 1 << j
        masks[mask] += 1
    induced = Counter()
    vanilla = Counter()
    for mask, mult in masks.items():
        cls, van = _mask_contributions(mask)
        induced[cls] += mult
        for c, x in van.items():
            vanilla[c] += mult * x
    return [induced[i] for i in range(1, 7)], [vanilla[i] for i in range(1, 7)]


def all_three_paths(g):
    """Every 3-path as (t, u, v, w) with middle edge (u, v), each path once."""
    adj = adjacency(g)
    out = []
    for u, v in zip(g.edge_u.tolist(), g.edge_v.tolist()):
        for t in adj[u] - {v}:
            for w in adj[v] - {u}:
                if t != w:
                    out.append((t, u, v, w))
    return out


def centered_by_definition(g, path):
    t, u, v, w = path
    # order: lower degree first, ties by original label
    key = lambda x: (int(g.degrees[x]), int(g.labels[x]))
    adj_tw = g.has_edge(t, w)
    return key(v) < key(t) and key(u) < key(w) and adj_tw


def centered_candidates(g):
    """All (middle edge, t, w) outcomes of the centered sampler, by definition."""
    adj = adjacency(g)
    key = lambda x: (int(g.degrees[x]), int(g.labels[x]))
    out = []
    for u, v in zip(g.edge_u.tolist(), g.edge_v.tolist()):
        for t in adj[u]:
            if key(t) > key(v):
                for w in adj[v]:
                    if key(w) > key(u):
                        out.append((t, u, v, w))
    return out


def nx_graph(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(zip(g.edge_u.tolist(), g.edge_v.tolist()))
    return G


def triangle_count(g):
    return sum(nx.triangles(nx_graph(g)).values()) // 3
