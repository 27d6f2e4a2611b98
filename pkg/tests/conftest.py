import sys
from pathlib import Path

import pytest

from equicolor.coloring import Coloring
from equicolor.graph import Graph, complete, disjoint_union

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
sys.path.insert(0, str(Path(__file__).parent))


def pytest_addoption(parser):
    parser.addoption("--n9", action="store_true", help="include the 274668 nine-vertex graphs in the sweeps")


def fixture_paths(include_n9: bool):
    paths = [FIXTURES / f"graphs{n}.g6" for n in (6, 7, 8)]
    if include_n9:
        paths.append(FIXTURES / "graphs9.g6.gz")
    return paths


@pytest.fixture(scope="session")
def include_n9(request):
    return request.config.getoption("--n9")


def chorded_c7() -> Graph:
    # C_7 on v1..v7 plus the chord v1v4, shifted to 0-indexed vertices
    return Graph.from_edges(7, [(i, (i + 1) % 7) for i in range(7)] + [(0, 3)])


def random_small_coloring(g, rng):
    order = list(range(g.n))
    rng.shuffle(order)
    classes = []
    for v in order:
        fits = [c for c in classes if len(c) < 3 and not any(g.adjacent(v, u) for u in c)]
        if fits and rng.random() < 0.8:
            rng.choice(fits).append(v)
        else:
            classes.append([v])
    return Coloring.from_classes(classes)


def relabel(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


@pytest.fixture
def c7():
    return chorded_c7()


@pytest.fixture
def k4_k3():
    return disjoint_union(complete(4), complete(3))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
