import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equicolor.audit import STATEMENTS, audit_lemma10, check_statement
from equicolor.coloring import Coloring
from equicolor.graph import Graph, complete_bipartite, empty, gnp, parse_graph6
from equicolor.oracle import read_fixture
from equicolor.search import find_improving_move, run_local_search
from conftest import FIXTURES, random_small_coloring
from oracles import best_profile


def test_two_nonadjacent_singletons():
    g = Graph.from_edges(4, [(0, 1)])
    c = Coloring(((0, 2), (1,), (3,)))
    report = audit_lemma10(g, c)
    assert 1 in report.statements()
    v = next(v for v in report.violations if v.statement == 1)
    assert v.classes == (1, 2)


def test_k33_vacuous():
    assert audit_lemma10(complete_bipartite(3, 3), Coloring(((0, 1, 2), (3, 4, 5)))).ok


def test_statement2_isolated_triple():
    # w with no edge into a pair: w + U is a 3-independent set
    g = Graph.from_edges(3, [])
    report = audit_lemma10(g, Coloring(((0, 1), (2,))))
    assert report.statements() == {2}


def test_statement7_missing_matching():
    # two pairs with a single edge between them
    g = Graph.from_edges(4, [(0, 2)])
    assert [v.statement for v in check_statement(g, Coloring(((0, 1), (2, 3))), 7)] == [7]


def test_statement8_two_cliques():
    # three pairs forming 2K_3: hypothesis holds and the conclusion is satisfied
    g = Graph.from_edges(6, [(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5)])
    c = Coloring(((0, 1), (2, 3), (4, 5)))
    assert check_statement(g, c, 8) == []
    # a 6-cycle alternating between pairs: hypothesis holds, conclusion fails
    h = Graph.from_edges(6, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 5), (5, 0)])
    assert [v.statement for v in check_statement(h, c, 8)] == [8]


def test_statement12_shape():
    # X = {0,1,2}, U = {3,4}, U' = {5,6}; triangles 0-3-5 and 1-4-6, vertex 2 isolated
    edges = [(0, 3), (3, 5), (0, 5), (1, 4), (4, 6), (1, 6)]
    g = Graph.from_edges(7, edges)
    c = Coloring(((0, 1, 2), (3, 4), (5, 6)))
    assert check_statement(g, c, 12) == []
    bad = Graph.from_edges(7, [(0, 3), (3, 5), (1, 5), (1, 4), (4, 6), (2, 6)])
    assert [v.statement for v in check_statement(bad, c, 12)] == [12]


def test_statement13_shape():
    # w = 0, U = {1,2}, U' = {3,4}: triangle 0-1-3 and edge 2-4
    g = Graph.from_edges(5, [(0, 1), (1, 3), (0, 3), (2, 4)])
    c = Coloring(((0,), (1, 2), (3, 4)))
    assert check_statement(g, c, 13) == []
    bad = Graph.from_edges(5, [(0, 1), (1, 3), (2, 4), (0, 4)])
    # ||w,U|| = ||w,U'|| = 1, ||U,U'|| = 2 but w's neighbours are not adjacent
    assert [v.statement for v in check_statement(bad, c, 13)] == [13]


def test_rejects_large_classes():
    with pytest.raises(ValueError):
        audit_lemma10(empty(4), Coloring(((0, 1, 2, 3),)))


def test_closed_colorings_audit_clean_small_corpus():
    for n in (6, 7):
        for code in read_fixture(FIXTURES / f"graphs{n}.g6"):
            g = parse_graph6(code)
            c, _ = run_local_search(g)
            assert audit_lemma10(g, c).ok, code


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6), st.integers(3, 10), st.sampled_from([0.15, 0.3, 0.5]))
def test_every_violation_has_a_local_repair(seed, n, p):
    """A listed witness always spans classes whose union can be lex-improved."""
    rng = random.Random(seed)
    g = gnp(n, p, seed=seed)
    c = random_small_coloring(g, rng)
    report = audit_lemma10(g, c)
    for v in report.violations:
        if v.statement == 8:
            assert find_improving_move(g, c, radius=3) is not None
            continue
        verts = [u for i in set(v.classes) for u in c.classes[i]]
        sizes = [len(c.classes[i]) for i in set(v.classes)]
        current = (sizes.count(3), sizes.count(2))
        assert best_profile(g, verts) > current, (v, c.classes)
    if report.ok is False:
        assert find_improving_move(g, c, radius=3) is not None


def test_statement_ids():
    assert STATEMENTS == tuple(range(1, 14))
