import numpy as np
import pytest

from pathmotif import Graph
from pathmotif.generators import complete_graph, cycle_graph, path_graph, star_graph


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def triangle():
    return complete_graph(3)


@pytest.fixture
def star3():
    return star_graph(3)


@pytest.fixture
def chordal():
    # 4-cycle 1-2-3-4 plus chord (1,3), and a pendant 5 on 4
    return Graph.from_edges([(1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (4, 5)])


def random_graphs(count, n_range, seed, p_range=(0.05, 0.9)):
    """Seeded Erdos-Renyi graphs with mixed sizes and densities."""
    from pathmotif.generators import erdos_renyi

    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        p = float(rng.uniform(*p_range))
        out.append(erdos_renyi(n, p, seed=int(rng.integers(2**31))))
    return out


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE = {}


def record(criterion, ok, detail):
    status = "SKIP" if ok is None else ("PASS" if ok else "FAIL")
    line = f"criterion {criterion}: {status}  {detail}"
    ACCEPTANCE[criterion] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for c in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[c])
