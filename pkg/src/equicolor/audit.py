"""Structural audit of a coloring whose classes all have size at most three.

Each check is the implication form of one structural property that a
lex-maximal [r, s, t]-coloring must have. Triples are called X, pairs U and
singletons w, by size. Every property's failure can be repaired by
repartitioning at most three classes, so a coloring closed under the
local search moves (radius >= 3) should never fail any check.

Statement ids:

1. singletons are mutually adjacent
2. ``||w, U|| >= 1``
3. ``||w, U|| = 1`` via ``u`` implies every singleton is adjacent to ``u``
4. ``||w, X|| = 1`` via ``x`` implies every singleton is adjacent to ``x``
5. ``||{w, w'}, X|| >= 2``, and equality forces ``||w, X|| = ||w', X|| = 1``
6. ``||w, X|| = 0`` implies ``||X, U|| >= 3``, ``||w + X, U|| >= 4`` and some
   ``b`` in ``U`` has ``||w + X, b|| >= 3``
7. ``G[U + U']`` has a 2-matching
8. ``||U, U'|| = 2`` for all pairs of pairs implies the pairs induce ``2K_s``
9. ``||X, U|| = 0`` implies ``||w, X|| >= 2`` and ``||w, X + U|| >= 4`` for every
   singleton, and ``||g, X|| >= 2``, ``||g, X + U|| >= 4`` for every vertex
   ``g`` of every other pair
10. ``||X, U|| = 1`` implies ``||X, U'|| >= 3`` for every other pair
11. ``||X, U + U'|| >= 4``
12. ``||X, U|| = ||X, U'|| = ||U, U'|| = 2`` implies ``G[X + U + U'] = K_1 + 2K_3``
13. ``||w, U|| = ||w, U'|| = 1`` and ``||U, U'|| = 2`` imply ``G[w + U + U'] = K_2 + K_3``
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .coloring import Coloring
from .graph import Graph, iter_bits


@dataclass(frozen=True)
class Violation:
    statement: int
    classes: tuple[int, ...]
    vertices: tuple[int, ...] = ()
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "statement": self.statement,
            "classes": list(self.classes),
            "vertices": list(self.vertices),
            "detail": self.detail,
        }


@dataclass
class AuditReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def statements(self) -> set[int]:
        return {v.statement for v in self.violations}

    def to_dict(self) -> dict:
        return {"ok": self.ok, "violations": [v.to_dict() for v in self.violations]}


def _count(adj, a: int, b: int) -> int:
    # edges between disjoint masks a and b
    return sum((adj[v] & b).bit_count() for v in iter_bits(a))


def _shape(g: Graph, mask: int) -> list[tuple[int, int]]:
    """Sorted (component size, component edge count) pairs of ``G[mask]``."""
    seen = 0
    out = []
    for v in iter_bits(mask):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u] & mask
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        edges = sum((g.adj[u] & comp).bit_count() for u in iter_bits(comp)) // 2
        out.append((comp.bit_count(), edges))
    return sorted(out)


def check_statement(g: Graph, c: Coloring, statement: int) -> list[Violation]:
    return _CHECKS[statement](g, c, *_split(c))


def _split(c: Coloring):
    triples = [i for i, cl in enumerate(c.classes) if len(cl) == 3]
    pairs = [i for i, cl in enumerate(c.classes) if len(cl) == 2]
    singles = [i for i, cl in enumerate(c.classes) if len(cl) == 1]
    return triples, pairs, singles


def _s1(g, c, X, U, W):
    m = c.masks
    return [
        Violation(1, (a, b), c.classes[a] + c.classes[b], "singletons not adjacent")
        for a, b in combinations(W, 2)
        if not g.adj[c.classes[a][0]] & m[b]
    ]


def _s2(g, c, X, U, W):
    m = c.masks
    return [
        Violation(2, (k, j), c.classes[k] + c.classes[j], "||w,U|| = 0")
        for k in W
        for j in U
        if _count(g.adj, m[k], m[j]) == 0
    ]


def _s3_s4(statement):
    def check(g, c, X, U, W):
        m = c.masks
        out = []
        for k in W:
            w = c.classes[k][0]
            for j in (U if statement == 3 else X):
                hits = g.adj[w] & m[j]
                if hits.bit_count() != 1:
                    continue
                for k2 in W:
                    if k2 != k and not g.adj[c.classes[k2][0]] & hits:
                        out.append(
                            Violation(statement, (k, j, k2), (w, hits.bit_length() - 1, c.classes[k2][0]),
                                      "another singleton misses the unique neighbour")
                        )
        return out

    return check


def _s5(g, c, X, U, W):
    m = c.masks
    out = []
    for i in X:
        for k, k2 in combinations(W, 2):
            a, b = _count(g.adj, m[k], m[i]), _count(g.adj, m[k2], m[i])
            if a + b < 2:
                out.append(Violation(5, (i, k, k2), detail=f"||{{w,w'}},X|| = {a + b}"))
            elif a + b == 2 and (a, b) != (1, 1):
                out.append(Violation(5, (i, k, k2), detail=f"split {a}+{b} instead of 1+1"))
    return out


def _s6(g, c, X, U, W):
    m = c.masks
    out = []
    for k in W:
        for i in X:
            if _count(g.adj, m[k], m[i]) != 0:
                continue
            wx = m[k] | m[i]
            for j in U:
                xu = _count(g.adj, m[i], m[j])
                wxu = _count(g.adj, wx, m[j])
                beta = max(_count(g.adj, wx, 1 << b) for b in c.classes[j])
                if xu < 3 or wxu < 4 or beta < 3:
                    out.append(
                        Violation(6, (k, i, j), detail=f"||X,U||={xu} ||w+X,U||={wxu} max_b={beta}")
                    )
    return out


def _two_matching(g, p, q) -> bool:
    (a, b), (x, y) = p, q
    return (g.adjacent(a, x) and g.adjacent(b, y)) or (g.adjacent(a, y) and g.adjacent(b, x))


def _s7(g, c, X, U, W):
    return [
        Violation(7, (j, j2), c.classes[j] + c.classes[j2], "no 2-matching")
        for j, j2 in combinations(U, 2)
        if not _two_matching(g, c.classes[j], c.classes[j2])
    ]


def _s8(g, c, X, U, W):
    m = c.masks
    if not U:
        return []
    if any(_count(g.adj, m[j], m[j2]) != 2 for j, j2 in combinations(U, 2)):
        return []
    union = 0
    for j in U:
        union |= m[j]
    s = len(U)
    clique = (s, s * (s - 1) // 2)
    if _shape(g, union) != [clique, clique]:
        return [Violation(8, tuple(U), detail=f"pairs induce {_shape(g, union)}, not 2K_{s}")]
    return []


def _s9(g, c, X, U, W):
    m = c.masks
    out = []
    for i in X:
        for j in U:
            if _count(g.adj, m[i], m[j]) != 0:
                continue
            xu = m[i] | m[j]
            for k in W:
                a, b = _count(g.adj, m[k], m[i]), _count(g.adj, m[k], xu)
                if a < 2 or b < 4:
                    out.append(Violation(9, (i, j, k), detail=f"(i) ||w,X||={a} ||w,X+U||={b}"))
            for j2 in U:
                if j2 == j:
                    continue
                for gamma in c.classes[j2]:
                    a, b = _count(g.adj, 1 << gamma, m[i]), _count(g.adj, 1 << gamma, xu)
                    if a < 2 or b < 4:
                        out.append(
                            Violation(9, (i, j, j2), (gamma,), f"(ii) ||g,X||={a} ||g,X+U||={b}")
                        )
    return out


def _s10(g, c, X, U, W):
    m = c.masks
    out = []
    for i in X:
        for j in U:
            if _count(g.adj, m[i], m[j]) != 1:
                continue
            for j2 in U:
                if j2 != j and _count(g.adj, m[i], m[j2]) < 3:
                    out.append(Violation(10, (i, j, j2), detail="||X,U'|| < 3"))
    return out


def _s11(g, c, X, U, W):
    m = c.masks
    return [
        Violation(11, (i, j, j2), detail="||X,U+U'|| < 4")
        for i in X
        for j, j2 in combinations(U, 2)
        if _count(g.adj, m[i], m[j] | m[j2]) < 4
    ]


def _s12(g, c, X, U, W):
    m = c.masks
    out = []
    for i in X:
        for j, j2 in combinations(U, 2):
            if _count(g.adj, m[i], m[j]) == _count(g.adj, m[i], m[j2]) == _count(g.adj, m[j], m[j2]) == 2:
                shape = _shape(g, m[i] | m[j] | m[j2])
                if shape != [(1, 0), (3, 3), (3, 3)]:
                    out.append(Violation(12, (i, j, j2), detail=f"induces {shape}"))
    return out


def _s13(g, c, X, U, W):
    m = c.masks
    out = []
    for k in W:
        for j, j2 in combinations(U, 2):
            if _count(g.adj, m[k], m[j]) == _count(g.adj, m[k], m[j2]) == 1 and _count(g.adj, m[j], m[j2]) == 2:
                shape = _shape(g, m[k] | m[j] | m[j2])
                if shape != [(2, 1), (3, 3)]:
                    out.append(Violation(13, (k, j, j2), detail=f"induces {shape}"))
    return out


_CHECKS = {
    1: _s1,
    2: _s2,
    3: _s3_s4(3),
    4: _s3_s4(4),
    5: _s5,
    6: _s6,
    7: _s7,
    8: _s8,
    9: _s9,
    10: _s10,
    11: _s11,
    12: _s12,
    13: _s13,
}

STATEMENTS = tuple(_CHECKS)


def audit_lemma10(g: Graph, c: Coloring) -> AuditReport:
    """Evaluate all thirteen structural statements; vacuous hypotheses pass."""
    if any(len(cl) > 3 for cl in c.classes):
        raise ValueError("audit needs every class to have size at most 3")
    parts = _split(c)
    report = AuditReport()
    for sid in STATEMENTS:
        report.violations.extend(_CHECKS[sid](g, c, *parts))
    return report
