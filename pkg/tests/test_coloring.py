import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from equicolor.coloring import Coloring, Profile, ProfileError, lex_compare, profile_of, verify
from equicolor.graph import complete_bipartite, cycle, empty, gnp


def test_profile_counts():
    assert profile_of(Coloring(((0, 1, 2), (3, 4), (5, 6)))) == Profile(1, 2, 0)
    assert profile_of(Coloring(tuple((v,) for v in range(6)))) == Profile(0, 0, 6)
    assert profile_of(Coloring(((0, 1, 2), (3, 4, 5), (6,)))) == Profile(2, 0, 1)


def test_profile_rejects_big_class():
    with pytest.raises(ProfileError):
        profile_of(Coloring(((0, 1, 2, 3), (4,))))
    with pytest.raises(ProfileError):
        profile_of(Coloring(((), (0,))))


def test_profile_vertex_identity():
    p = profile_of(Coloring(((0, 1, 2), (3, 4), (5,), (6, 7))))
    assert p.vertices == 8 and p.classes == 4


def test_verify_k33_sides():
    rep = verify(complete_bipartite(3, 3), Coloring(((0, 1, 2), (3, 4, 5))))
    assert rep.proper and rep.equitable and rep.class_count == 2 and rep.ok


def test_verify_improper_c5():
    # v1v2 | v3v4v5 on C_5
    rep = verify(cycle(5), Coloring(((0, 1), (2, 3, 4))))
    assert not rep.proper
    assert (0, 1) in rep.violations


def test_verify_spread():
    rep = verify(empty(7), Coloring(((0, 1, 2, 3), (4, 5), (6,))))
    assert rep.proper and not rep.equitable and rep.size_spread == 3


def test_verify_universe_and_k():
    g = empty(4)
    rep = verify(g, Coloring(((0, 1), (1, 2))))
    assert rep.missing == [3] and rep.duplicated == [1] and not rep.ok
    rep = verify(g, Coloring(((0, 1), (2, 9))))
    assert rep.out_of_range == [9] and rep.missing == [3]
    rep = verify(g, Coloring(((0, 1), (2, 3))), expected_k=3)
    assert rep.proper and rep.equitable and not rep.k_ok and not rep.ok


@given(st.integers(0, 2**31), st.integers(1, 12), st.floats(0, 1))
def test_proper_matches_label_check(seed, n, p):
    g = gnp(n, p, seed=seed)
    rng = random.Random(seed)
    labels = [rng.randrange(3) for _ in range(n)]
    c = Coloring.from_labels(labels)
    by_edges = all(labels[u] != labels[v] for u, v in g.edges())
    assert verify(g, c).proper == by_edges


@given(st.permutations(list(range(6))))
def test_profile_permutation_invariant(perm):
    classes = ((0, 1, 2), (3, 4), (5, 6), (7,), (8, 9, 10), (11,))
    assert profile_of(Coloring(tuple(classes[i] for i in perm))) == profile_of(Coloring(classes))


@given(st.lists(st.sampled_from([2, 3]), min_size=1, max_size=10))
def test_sizes_two_three_are_equitable(sizes):
    classes, v = [], 0
    for s in sizes:
        classes.append(tuple(range(v, v + s)))
        v += s
    assert verify(empty(v), Coloring(tuple(classes))).equitable


def test_lex_compare_examples():
    assert lex_compare(Profile(2, 0, 1), Profile(1, 2, 0)) == 1
    assert lex_compare(Profile(1, 2, 0), Profile(1, 1, 2)) == 1
    assert lex_compare(Profile(1, 2, 0), Profile(1, 2, 0)) == 0
    assert lex_compare(Profile(1, 1, 2), Profile(1, 2, 0)) == -1


profiles = st.builds(Profile, st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))


@given(profiles, profiles, profiles)
def test_lex_compare_total_preorder(a, b, c):
    assert lex_compare(a, b) == -lex_compare(b, a)
    if lex_compare(a, b) >= 0 and lex_compare(b, c) >= 0:
        assert lex_compare(a, c) >= 0


def test_json_roundtrip():
    c = Coloring(((0, 2, 4), (1, 3), (5,)))
    d = c.to_dict()
    assert d == {"k": 3, "classes": [[0, 2, 4], [1, 3], [5]], "profile": [1, 1, 1]}
    assert Coloring.from_json(c.to_json()) == c
    assert Coloring(((0, 1, 2, 3),)).to_dict()["profile"] is None
    with pytest.raises(ValueError):
        Coloring.from_dict({"k": 2, "classes": [[0]]})


def test_from_labels_and_index():
    c = Coloring.from_labels([2, 0, 2, 1])
    assert c.classes == ((0, 2), (1,), (3,))
    assert c.class_index() == {0: 0, 2: 0, 1: 1, 3: 2}
    assert c.labels(4) == [0, 1, 0, 2]
