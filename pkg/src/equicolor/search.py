"""Lexicographic local search over small class repartitions.

A move takes the union of at most ``radius`` color classes and re-partitions
it into independent blocks of size at most three so that the profile rises
in the (r, s) lexicographic order. The search stops at a coloring that no
such move improves. With r and s bounded by n/3 and n/2, the number of
steps is bounded by (n//3 + 1) * (n//2 + 1).
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Optional

from .coloring import Coloring, Profile, profile_of
from .graph import Graph, iter_bits

log = logging.getLogger(__name__)

DEFAULT_RADIUS = 4


class StaleMoveError(ValueError):
    """The move's source classes are not the coloring's current classes."""


class SearchBudgetExceeded(RuntimeError):
    """More steps than the lex potential allows; indicates a bug."""


@dataclass(frozen=True)
class Move:
    sources: tuple[int, ...]
    source_classes: tuple[tuple[int, ...], ...]
    replacement: tuple[tuple[int, ...], ...]
    profile_before: Profile
    profile_after: Profile

    def to_dict(self) -> dict:
        return {
            "sources": list(self.sources),
            "removed": [list(c) for c in self.source_classes],
            "added": [list(b) for b in self.replacement],
            "delta": [a - b for a, b in zip(self.profile_after, self.profile_before)],
            "profile": list(self.profile_after),
        }


@dataclass
class Trace:
    initial_profile: Profile
    steps: list[tuple[Move, Profile]] = field(default_factory=list)

    @property
    def final_profile(self) -> Profile:
        return self.steps[-1][1] if self.steps else self.initial_profile

    def profiles(self) -> list[Profile]:
        return [self.initial_profile] + [p for _, p in self.steps]

    def is_strictly_increasing(self) -> bool:
        keys = [p.lex_key() for p in self.profiles()]
        return all(a < b for a, b in zip(keys, keys[1:]))

    def to_dict(self) -> dict:
        return {
            "initial_profile": list(self.initial_profile),
            "steps": [m.to_dict() for m, _ in self.steps],
        }


def step_bound(n: int) -> int:
    return (n // 3 + 1) * (n // 2 + 1)


def trivial_coloring(g: Graph) -> Coloring:
    return Coloring(tuple((v,) for v in range(g.n)))


class RepartitionCache:
    """Memoized best partition of a vertex mask into independent blocks of size <= 3.

    "Best" means lexicographically most triples, then most pairs. The table
    is keyed by vertex mask only, so one cache serves a whole search on a
    fixed graph.
    """

    def __init__(self, g: Graph):
        self.g = g
        self._memo: dict[int, tuple[int, int, tuple[int, ...]]] = {0: (0, 0, ())}

    def best(self, mask: int) -> tuple[int, int, tuple[int, ...]]:
        hit = self._memo.get(mask)
        if hit is not None:
            return hit
        adj = self.g.adj
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        free = rest & ~adj[v]

        r, s, blocks = self.best(rest)
        best = (r, s + 0, (low,) + blocks)
        best_key = (r, s)
        for u in iter_bits(free):
            bu = 1 << u
            r, s, blocks = self.best(rest ^ bu)
            if (r, s + 1) > best_key:
                best_key = (r, s + 1)
                best = (r, s + 1, (low | bu,) + blocks)
            for w in iter_bits(free & ~adj[u] & ~((bu << 1) - 1)):
                bw = 1 << w
                r, s, blocks = self.best(rest ^ bu ^ bw)
                if (r + 1, s) > best_key:
                    best_key = (r + 1, s)
                    best = (r + 1, s, (low | bu | bw,) + blocks)
        self._memo[mask] = best
        return best


def _local_key(sizes: list[int]) -> tuple[int, int]:
    return (sizes.count(3), sizes.count(2))


def _upper_key(n: int) -> tuple[int, int]:
    return (n // 3, (n % 3) // 2)


def find_improving_move(
    g: Graph,
    c: Coloring,
    radius: int = DEFAULT_RADIUS,
    cache: Optional[RepartitionCache] = None,
) -> Optional[Move]:
    """First lex-improving repartition over ascending class-index tuples.

    Subsets of two classes are tried before three, three before four. Within
    the first improvable subset the lex-best repartition is returned. ``None``
    means no union of at most ``radius`` classes can be improved.
    """
    if cache is None:
        cache = RepartitionCache(g)
    before = profile_of(c)
    sizes = c.sizes()
    masks = c.masks
    for size in range(2, min(radius, c.k) + 1):
        for combo in itertools.combinations(range(c.k), size):
            local_sizes = [sizes[i] for i in combo]
            nverts = sum(local_sizes)
            current = _local_key(local_sizes)
            if current >= _upper_key(nverts):
                continue
            union = 0
            for i in combo:
                union |= masks[i]
            r, s, blocks = cache.best(union)
            if (r, s) <= current:
                continue
            replacement = tuple(tuple(iter_bits(b)) for b in blocks)
            after = Profile(
                before.r - current[0] + r,
                before.s - current[1] + s,
                before.t - (size - current[0] - current[1]) + (len(blocks) - r - s),
            )
            return Move(combo, tuple(c.classes[i] for i in combo), replacement, before, after)
    return None


def apply_move(c: Coloring, m: Move) -> Coloring:
    """Drop the move's source classes and append its replacement blocks."""
    if any(i >= c.k or c.classes[i] != cls_ for i, cls_ in zip(m.sources, m.source_classes)):
        raise StaleMoveError(f"move sources {m.sources} do not match the coloring")
    removed = set(m.sources)
    kept = [cls_ for i, cls_ in enumerate(c.classes) if i not in removed]
    return Coloring(tuple(kept) + tuple(m.replacement))


def run_local_search(
    g: Graph,
    start: Optional[Coloring] = None,
    radius: int = DEFAULT_RADIUS,
    max_steps: Optional[int] = None,
) -> tuple[Coloring, Trace]:
    """Apply improving moves until none exists at ``radius``.

    Starts from the all-singletons coloring when ``start`` is omitted.
    Raises :class:`SearchBudgetExceeded` after ``4 n^2`` moves (the lex
    potential makes that impossible for a correct move generator).
    """
    c = trivial_coloring(g) if start is None else start
    budget = 4 * g.n * g.n if max_steps is None else max_steps
    cache = RepartitionCache(g)
    trace = Trace(profile_of(c))
    while True:
        m = find_improving_move(g, c, radius, cache)
        if m is None:
            return c, trace
        if len(trace.steps) >= budget:
            raise SearchBudgetExceeded(f"more than {budget} moves on a graph of order {g.n}")
        c = apply_move(c, m)
        trace.steps.append((m, m.profile_after))
        log.debug("move %s -> %s", m.sources, m.profile_after)
