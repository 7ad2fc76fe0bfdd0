import pytest

from pathmotif import Graph, brute_force_counts, build_basic_weights, build_centered_weights, fast_exact_counts, star_count
from pathmotif.errors import BruteForceCapError
from pathmotif.exact import enumerate_centered, enumerate_triangles
from pathmotif.generators import complete_graph, erdos_renyi, path_graph

from conftest import random_graphs
from oracles import brute_induced_and_vanilla, triangle_count


def test_k4(k4):
    for counts in (brute_force_counts(k4), fast_exact_counts(k4)):
        assert counts.induced.values == (0, 0, 0, 0, 0, 1)
        assert counts.vanilla.values == (4, 12, 12, 3, 6, 1)
        assert counts.triangles == 4


def test_cycle(c4):
    for counts in (brute_force_counts(c4), fast_exact_counts(c4)):
        assert counts.induced.values == (0, 0, 0, 1, 0, 0)
        assert counts.vanilla.values == (0, 4, 0, 1, 0, 0)


def test_path(p4):
    assert brute_force_counts(p4).induced.values == (0, 1, 0, 0, 0, 0)
    assert fast_exact_counts(p4).induced.values == (0, 1, 0, 0, 0, 0)


def test_triangle_free_graph():
    g = Graph.from_edges([(i, j) for i in range(5) for j in range(5, 10) if (i + j) % 3])
    c = fast_exact_counts(g)
    assert c.triangles == 0
    assert c.vanilla[2] == build_basic_weights(g).W
    assert c.vanilla[3] == 0 and c.induced[5] == 0 and c.induced[6] == 0


def test_empty_and_tiny():
    for g in (Graph.from_edges([]), Graph.from_edges([(1, 2)]), complete_graph(3)):
        assert fast_exact_counts(g).induced.values == (0,) * 6
        assert brute_force_counts(g).induced.values == (0,) * 6


def test_cap():
    g = path_graph(30)
    with pytest.raises(BruteForceCapError) as exc:
        brute_force_counts(g, cap=20)
    assert exc.value.cap == 20
    assert brute_force_counts(g, cap=30).induced[2] == 27


@pytest.mark.parametrize("g", random_graphs(10, (5, 13), seed=3), ids=lambda g: f"n{g.n}m{g.m}")
def test_brute_force_against_isomorphism_oracle(g):
    induced, vanilla = brute_induced_and_vanilla(g)
    c = brute_force_counts(g)
    assert list(c.induced.values) == induced
    assert list(c.vanilla.values) == vanilla
    assert c.triangles == triangle_count(g)


@pytest.mark.parametrize("g", random_graphs(25, (5, 45), seed=77), ids=lambda g: f"n{g.n}m{g.m}")
def test_fast_matches_brute(g):
    fast = fast_exact_counts(g)
    assert fast == brute_force_counts(g)
    assert fast.vanilla[2] == build_basic_weights(g).W - 3 * fast.triangles
    assert fast.vanilla[1] == star_count(g)


@pytest.mark.parametrize("window", [1, 7, 64])
def test_window_size_does_not_change_counts(window):
    g = erdos_renyi(25, 0.4, seed=8)
    assert fast_exact_counts(g, window=window) == fast_exact_counts(g)


def test_centered_enumeration_visits_lambda():
    for g in random_graphs(10, (5, 40), seed=13):
        _, visited = enumerate_centered(g)
        assert visited == build_centered_weights(g).Lambda
        assert enumerate_triangles(g)[0] == triangle_count(g)
