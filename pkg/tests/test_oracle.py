import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equicolor.coloring import verify
from equicolor.graph import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    gnp,
    hypercube,
    parse_graph6,
)
from equicolor.oracle import (
    FORBIDDEN,
    OUT_OF_WINDOW,
    SOLVED,
    OracleCapExceeded,
    decide_equitable,
    equitable_spectrum,
    exact_params,
    independence_number,
    is_colorable,
    naive_decide_equitable,
    read_fixture,
    sweep,
)
from conftest import FIXTURES, chorded_c7
from oracles import exhaustive_equitable


def test_k33_spectrum():
    spec = equitable_spectrum(complete_bipartite(3, 3))
    assert spec == {1: False, 2: True, 3: False, 4: True, 5: True, 6: True}


def test_c5_not_two_colorable():
    assert decide_equitable(cycle(5), 2) is None
    c = decide_equitable(cycle(5), 3)
    assert verify(cycle(5), c, expected_k=3).ok


@pytest.mark.parametrize(
    "g, expected",
    [
        (complete_bipartite(3, 3), (2, 2, 4, 3)),
        (cycle(5), (3, 3, 3, 2)),
        (complete(5), (5, 5, 5, 1)),
        (empty(4), (1, 1, 1, 4)),
        (hypercube(3), (2, 2, 2, 4)),
        (chorded_c7(), (3, 3, 3, 3)),
    ],
)
def test_exact_params(g, expected):
    assert tuple(exact_params(g)) == expected


def test_empty_graph():
    assert tuple(exact_params(Graph.from_edges(0, []))) == (0, 0, 0, 0)


def test_cap():
    with pytest.raises(OracleCapExceeded):
        decide_equitable(cycle(20), 2)
    assert decide_equitable(cycle(20), 2, cap=20) is not None


def test_k_range():
    with pytest.raises(ValueError):
        decide_equitable(cycle(5), 0)
    with pytest.raises(ValueError):
        decide_equitable(cycle(5), 6)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 6), st.sampled_from([0.2, 0.5, 0.8]), st.integers(1, 4))
def test_backtracking_matches_enumeration(seed, n, p, k):
    g = gnp(n, p, seed=seed)
    k = min(k, n)
    witness = decide_equitable(g, k)
    assert (witness is not None) == (exhaustive_equitable(g, k) is not None)
    assert (witness is not None) == naive_decide_equitable(g, k)
    if witness is not None:
        assert verify(g, witness, expected_k=k).ok


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 8), st.sampled_from([0.3, 0.6]))
def test_independence_and_chromatic(seed, n, p):
    g = gnp(n, p, seed=seed)
    brute_alpha = max(
        len(s)
        for r in range(n + 1)
        for s in itertools.combinations(range(n), r)
        if g.is_independent(g.mask(s))
    )
    assert independence_number(g) == brute_alpha
    chi = next(k for k in range(1, n + 1) if is_colorable(g, k))
    assert chi == 1 or not is_colorable(g, chi - 1)


def test_parameter_chain_on_six_vertex_corpus():
    for code in read_fixture(FIXTURES / "graphs6.g6"):
        g = parse_graph6(code)
        chi, chi_eq, star, _ = exact_params(g)
        assert chi <= chi_eq <= star <= g.max_degree + 1, code


def test_sweep_dispositions():
    rep = sweep([disjoint_union(complete(4), complete(3)), complete_bipartite(3, 3), chorded_c7()])
    assert rep.totals[FORBIDDEN] == 1
    assert rep.totals[OUT_OF_WINDOW] == 1
    assert rep.totals[SOLVED] == 1
    assert rep.ok and not rep.failures


def test_sweep_six_vertex_corpus():
    rep = sweep(read_fixture(FIXTURES / "graphs6.g6"))
    assert rep.corpus_size == 156
    # no six-vertex graph meets the degree window
    assert rep.totals[OUT_OF_WINDOW] == 156


def test_sweep_seven_vertex_corpus_parallel():
    codes = list(read_fixture(FIXTURES / "graphs7.g6"))
    serial = sweep(codes)
    parallel = sweep(codes, jobs=2, batch_size=100)
    assert serial.ok
    assert serial.totals[SOLVED] > 0
    assert serial.to_json(with_runtime=False) == parallel.to_json(with_runtime=False)
    data = json.loads(serial.to_json())
    assert "runtime" in data and data["corpus_size"] == 1044
    assert set(data["sigma_minus_delta"]) == {"0"}


def test_summary_table():
    text = sweep([chorded_c7()]).summary()
    assert "in_window_solved" in text and "total" in text
