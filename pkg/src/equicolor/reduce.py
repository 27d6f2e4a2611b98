"""Turning a compact [r, s, t]-coloring into an equitable one.

``split_to`` raises the class count to a target ``m`` by splitting triples
into a pair and a singleton. ``balance`` then removes every singleton class
while keeping the class count fixed; each step trades one triple and one
singleton for two pairs, so the profile moves by (-1, +2, -1).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .coloring import Coloring, Profile, profile_of
from .graph import Graph


class HypothesisError(ValueError):
    """The degree or class-count hypothesis of the transformation does not hold."""


class ReductionContradiction(RuntimeError):
    """No reduction case applied although the hypotheses hold.

    The degree count behind the reduction rules this out, so reaching it
    means either a bug or a counterexample; ``certificate`` carries the data.
    """

    def __init__(self, message: str, certificate: dict):
        super().__init__(message)
        self.certificate = certificate


SINGLETON_PAIR = "singleton-pair"
TRIPLE_SINGLETON = "triple-singleton"
MIXED_U = "mixed-U"


@dataclass(frozen=True)
class ReductionStep:
    case_tag: str
    touched: tuple[int, ...]
    touched_classes: tuple[tuple[int, ...], ...]
    replacement: tuple[tuple[int, ...], ...]
    profile_before: Profile
    profile_after: Profile

    @property
    def delta(self) -> tuple[int, int, int]:
        return tuple(a - b for a, b in zip(self.profile_after, self.profile_before))

    def to_dict(self) -> dict:
        return {
            "case": self.case_tag,
            "touched": list(self.touched),
            "removed": [list(c) for c in self.touched_classes],
            "added": [list(c) for c in self.replacement],
            "delta": list(self.delta),
        }


def split_to(g: Graph, c: Coloring, m: int) -> Coloring:
    """Split ``q = m - (r + s + t)`` triples so the coloring has exactly ``m`` classes.

    The first ``q`` triples in class order are split; each keeps its first two
    vertices as a pair in place and its last vertex becomes a new singleton
    class at the end.
    """
    p = profile_of(c)
    delta = g.max_degree
    if not p.classes <= m <= delta:
        raise HypothesisError(f"target {m} outside [{p.classes}, {delta}] for profile {tuple(p)}")
    if not 2 * delta < g.n:
        raise HypothesisError(f"need 2*maxdeg < n, got maxdeg={delta}, n={g.n}")
    q = m - p.classes
    if q >= p.r and q > 0:
        raise HypothesisError(f"need {q} triples to split but only {p.r} exist")
    classes = list(c.classes)
    singles = []
    done = 0
    for i, cl in enumerate(classes):
        if done == q:
            break
        if len(cl) == 3:
            classes[i] = cl[:2]
            singles.append(cl[2:])
            done += 1
    return Coloring(tuple(classes) + tuple(singles))


def _check_balance_hypotheses(g: Graph, p: Profile) -> None:
    delta = g.max_degree
    if p.classes > delta:
        raise HypothesisError(f"profile {tuple(p)} uses {p.classes} classes, more than maxdeg={delta}")
    if not 2 * delta < g.n:
        raise HypothesisError(f"need 2*maxdeg < n, got maxdeg={delta}, n={g.n}")
    if p.t and not p.r > p.t:
        raise HypothesisError(f"r > t fails for profile {tuple(p)}")


def _step(c, tag, touched, replacement, before) -> ReductionStep:
    after = Profile(before.r - 1, before.s + 2, before.t - 1)
    return ReductionStep(tag, touched, tuple(c.classes[i] for i in touched), replacement, before, after)


def balance_step(g: Graph, c: Coloring) -> ReductionStep:
    """Find one (-1, +2, -1) reduction, trying the three cases in order.

    1. Two non-adjacent singletons become a pair; the first triple gives up
       its last vertex as a new singleton.
    2. A triple with a vertex ``z`` not adjacent to singleton ``w``: ``z``
       joins ``w`` and the other two stay as a pair.
    3. Triple vertex ``x``, singleton ``w`` and a pair ``U`` with at most one
       edge from ``{x, w}`` into ``U``: the four vertices split into two
       independent pairs and the triple's remaining two form a third.
    """
    p = profile_of(c)
    if p.t < 1:
        raise HypothesisError("no singleton class to eliminate")
    _check_balance_hypotheses(g, p)
    idx = {size: [i for i, cl in enumerate(c.classes) if len(cl) == size] for size in (1, 2, 3)}
    singles, pairs, triples = idx[1], idx[2], idx[3]

    for a, b in combinations(singles, 2):
        wa, wb = c.classes[a][0], c.classes[b][0]
        if not g.adjacent(wa, wb):
            i = triples[0]
            x, y, z = c.classes[i]
            return _step(c, SINGLETON_PAIR, (i, a, b), ((x, y), (z,), (wa, wb)), p)

    for i in triples:
        tri = c.classes[i]
        for k in singles:
            w = c.classes[k][0]
            free = [v for v in tri if not g.adjacent(v, w)]
            if free:
                z = min(free)
                rest = tuple(v for v in tri if v != z)
                return _step(c, TRIPLE_SINGLETON, (i, k), (rest, tuple(sorted((z, w)))), p)

    for i in triples:
        tri = c.classes[i]
        for k in singles:
            w = c.classes[k][0]
            for x in tri:
                xw = (1 << x) | (1 << w)
                for j in pairs:
                    u, v = c.classes[j]
                    if sum((g.adj[a] & xw).bit_count() for a in (u, v)) > 1:
                        continue
                    four = (x, w, u, v)
                    for first, second in (((x, w), (u, v)), ((x, u), (w, v)), ((x, v), (w, u))):
                        if not g.adjacent(*first) and not g.adjacent(*second):
                            rest = tuple(a for a in tri if a != x)
                            blocks = (tuple(sorted(first)), tuple(sorted(second)), rest)
                            return _step(c, MIXED_U, (i, k, j), blocks, p)
                    raise ReductionContradiction(
                        f"no two independent pairs in {four}",
                        {"classes": [list(cl) for cl in c.classes], "four": list(four)},
                    )

    raise ReductionContradiction(
        f"no reduction case applies to profile {tuple(p)}",
        {"n": g.n, "edges": [list(e) for e in g.edges()], "classes": [list(cl) for cl in c.classes]},
    )


def apply_step(c: Coloring, step: ReductionStep) -> Coloring:
    """Drop the touched classes and append the step's new classes."""
    if any(c.classes[i] != cl for i, cl in zip(step.touched, step.touched_classes)):
        raise ValueError(f"step touching {step.touched} does not match the coloring")
    touched = set(step.touched)
    kept = [cl for i, cl in enumerate(c.classes) if i not in touched]
    return Coloring(tuple(kept) + step.replacement)


def balance_steps(g: Graph, c: Coloring) -> Iterator[tuple[ReductionStep, Coloring]]:
    p = profile_of(c)
    _check_balance_hypotheses(g, p)
    for _ in range(p.t):
        step = balance_step(g, c)
        c = apply_step(c, step)
        yield step, c


def balance(g: Graph, c: Coloring) -> Coloring:
    """Apply exactly ``t`` reduction steps, ending at profile ``(r - t, s + 2t, 0)``."""
    for _, c in balance_steps(g, c):
        pass
    return c

