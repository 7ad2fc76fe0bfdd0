from itertools import combinations

import pytest

from pathmotif import Graph, MotifCounts, classify_four, induced_to_vanilla, star_count, vanilla_to_induced
from pathmotif.errors import CountOverflowError, InconsistentCountsError
from pathmotif.generators import complete_graph, path_graph, star_graph
from pathmotif.motifs import CONVERSION, Motif, mask_table

from conftest import random_graphs
from oracles import TEMPLATES, adjacency, brute_induced_and_vanilla, induced_edges, naive_class


def unit(i, basis="induced"):
    return MotifCounts(tuple(int(j == i) for j in range(1, 7)), basis)


def test_classify_examples(k4, p4, chordal):
    assert classify_four(k4, range(4)) == Motif.CLIQUE
    assert classify_four(p4, range(4)) == Motif.PATH
    four = [chordal.index_of(x) for x in (1, 2, 3, 4)]
    assert classify_four(chordal, four) == Motif.CHORDAL_CYCLE


def test_classify_short_and_duplicate_sets(k4):
    assert classify_four(k4, [0, 1, 2]) == Motif.NOT_CONNECTED
    assert classify_four(k4, [0, 1, 1, 2]) == Motif.NOT_CONNECTED
    tri_plus_isolate = Graph.from_edges([(1, 2), (2, 3), (3, 1), (4, 5)])
    verts = [tri_plus_isolate.index_of(x) for x in (1, 2, 3, 4)]
    assert classify_four(tri_plus_isolate, verts) == Motif.NOT_CONNECTED


def test_mask_table_matches_isomorphism():
    pairs = list(combinations(range(4), 2))
    table = mask_table()
    for mask in range(64):
        edges = [p for k, p in enumerate(pairs) if mask >> k & 1]
        assert table[mask] == naive_class(edges)


@pytest.mark.parametrize("g", random_graphs(6, (8, 30), seed=11), ids=lambda g: f"n{g.n}")
def test_classify_four_agrees_with_naive_classifier(g):
    adj = adjacency(g)
    for verts in combinations(range(g.n), 4):
        assert classify_four(g, verts) == naive_class(induced_edges(adj, verts))


def test_conversion_matrix_from_templates():
    # A[i][j] = copies of motif i among edge subsets of template j
    for j, edges in TEMPLATES.items():
        found = [0] * 7
        for r in range(3, len(edges) + 1):
            for sub in combinations(edges, r):
                found[naive_class(sub)] += 1
        assert [CONVERSION[i - 1][j - 1] for i in range(1, 7)] == found[1:]
    assert CONVERSION[1] == (0, 1, 2, 4, 6, 12)


def test_three_paths_per_template_by_path_enumeration():
    for j, edges in TEMPLATES.items():
        g = Graph.from_edges(edges)
        from oracles import all_three_paths

        assert len(all_three_paths(g)) == CONVERSION[1][j - 1]


def test_induced_to_vanilla_examples():
    assert induced_to_vanilla(unit(6)).values == (4, 12, 12, 3, 6, 1)
    assert induced_to_vanilla(unit(4)).values == (0, 4, 0, 1, 0, 0)
    assert induced_to_vanilla(MotifCounts.zeros("induced")) == MotifCounts.zeros("vanilla")


def test_vanilla_to_induced_examples():
    assert vanilla_to_induced(MotifCounts((4, 12, 12, 3, 6, 1), "vanilla")) == unit(6)
    assert vanilla_to_induced(MotifCounts.zeros("vanilla")) == MotifCounts.zeros("induced")


def test_unrealizable_vanilla_rejected():
    with pytest.raises(InconsistentCountsError):
        vanilla_to_induced(MotifCounts((0, 0, 0, 0, 1, 1), "vanilla"))


def test_basis_checks():
    with pytest.raises(ValueError):
        induced_to_vanilla(MotifCounts.zeros("vanilla"))
    with pytest.raises(ValueError):
        vanilla_to_induced(MotifCounts.zeros("induced"))


def test_overflow_is_explicit():
    big = MotifCounts((0, 0, 0, 0, 0, 2**64 // 4), "induced")
    with pytest.raises(CountOverflowError):
        induced_to_vanilla(big)
    with pytest.raises(CountOverflowError):
        MotifCounts((2**64, 0, 0, 0, 0, 0), "vanilla")


@pytest.mark.parametrize("g", random_graphs(8, (6, 14), seed=5), ids=lambda g: f"n{g.n}")
def test_round_trips_on_brute_counts(g):
    induced, vanilla = brute_induced_and_vanilla(g)
    c = MotifCounts(tuple(induced), "induced")
    n = MotifCounts(tuple(vanilla), "vanilla")
    assert induced_to_vanilla(c) == n
    assert vanilla_to_induced(n) == c
    assert induced_to_vanilla(vanilla_to_induced(n)) == n


def test_star_count():
    assert star_count(complete_graph(4)) == 4
    assert star_count(star_graph(3)) == 1
    assert star_count(path_graph(4)) == 0
    assert star_count(Graph.from_edges([])) == 0
