"""Colorings as ordered sequences of color classes, and their [r, s, t] profiles."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from .graph import Graph, iter_bits


class Profile(NamedTuple):
    """Counts of color classes of size three, two and one."""

    r: int
    s: int
    t: int

    @property
    def classes(self) -> int:
        return self.r + self.s + self.t

    @property
    def vertices(self) -> int:
        return 3 * self.r + 2 * self.s + self.t

    def lex_key(self) -> tuple[int, int]:
        return (self.r, self.s)


class ProfileError(ValueError):
    """A class has size 0 or at least 4, so no [r, s, t] profile exists."""


@dataclass(frozen=True)
class Coloring:
    """An ordered sequence of nonempty color classes.

    Classes keep the vertex order they were built with; several operations
    (splitting a triple, for example) depend on that order being stable.
    """

    classes: tuple[tuple[int, ...], ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        classes = tuple(tuple(int(v) for v in c) for c in self.classes)
        object.__setattr__(self, "classes", classes)
        masks = []
        for c in classes:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        object.__setattr__(self, "masks", tuple(masks))

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]]) -> "Coloring":
        return cls(tuple(tuple(c) for c in classes))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Coloring":
        """Build from a vertex -> color map; classes are ordered by first appearance."""
        order: dict[int, list[int]] = {}
        for v, c in enumerate(labels):
            order.setdefault(c, []).append(v)
        return cls(tuple(tuple(vs) for vs in order.values()))

    @property
    def k(self) -> int:
        return len(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def class_index(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.classes) for v in c}

    def labels(self, n: int) -> list[int]:
        out = [-1] * n
        for i, c in enumerate(self.classes):
            for v in c:
                out[v] = i
        return out

    def to_dict(self) -> dict:
        try:
            prof = list(profile_of(self))
        except ProfileError:
            prof = None
        return {"k": self.k, "classes": [list(c) for c in self.classes], "profile": prof}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Coloring":
        c = cls.from_classes(data["classes"])
        if "k" in data and data["k"] != c.k:
            raise ValueError(f"declared k={data['k']} but {c.k} classes given")
        return c

    @classmethod
    def from_json(cls, text: str) -> "Coloring":
        return cls.from_dict(json.loads(text))


def profile_of(c: Coloring) -> Profile:
    counts = [0, 0, 0, 0]
    for cls_ in c.classes:
        size = len(cls_)
        if not 1 <= size <= 3:
            raise ProfileError(f"class {cls_} has size {size}; profiles need sizes 1..3")
        counts[size] += 1
    return Profile(counts[3], counts[2], counts[1])


def lex_compare(p1: Profile, p2: Profile) -> int:
    """-1, 0 or 1 as ``p1`` is lex-smaller, equal or greater on (r, s)."""
    a, b = (p1[0], p1[1]), (p2[0], p2[1])
    return (a > b) - (a < b)


@dataclass
class VerifyReport:
    proper: bool
    equitable: bool
    class_count: int
    size_spread: int
    violations: list = field(default_factory=list)
    missing: list[int] = field(default_factory=list)
    duplicated: list[int] = field(default_factory=list)
    out_of_range: list[int] = field(default_factory=list)
    expected_k: Optional[int] = None

    @property
    def universe_ok(self) -> bool:
        return not (self.missing or self.duplicated or self.out_of_range)

    @property
    def k_ok(self) -> bool:
        return self.expected_k is None or self.expected_k == self.class_count

    @property
    def ok(self) -> bool:
        """Proper, equitable, on the right vertex set, and with the expected class count."""
        return self.proper and self.equitable and self.universe_ok and self.k_ok

    def to_dict(self) -> dict:
        return {
            "proper": self.proper,
            "equitable": self.equitable,
            "class_count": self.class_count,
            "size_spread": self.size_spread,
            "violations": [list(v) for v in self.violations],
            "missing": self.missing,
            "duplicated": self.duplicated,
            "out_of_range": self.out_of_range,
            "expected_k": self.expected_k,
            "ok": self.ok,
        }


def verify(g: Graph, c: Coloring, expected_k: Optional[int] = None) -> VerifyReport:
    """Check that ``c`` is a proper coloring of ``g`` and whether it is equitable.

    Edges inside a class are listed in ``violations``; vertices that are
    missing, listed twice or outside the graph are reported separately.
    Empty classes count towards the size spread.
    """
    seen: dict[int, int] = {}
    duplicated, out_of_range = set(), set()
    for cls_ in c.classes:
        for v in cls_:
            if not 0 <= v < g.n:
                out_of_range.add(v)
            elif v in seen:
                duplicated.add(v)
            seen[v] = seen.get(v, 0) + 1
    missing = [v for v in range(g.n) if v not in seen]

    violations = []
    for cls_, m in zip(c.classes, c.masks):
        inside = m & g.full_mask
        for v in sorted(set(cls_)):
            if 0 <= v < g.n:
                for u in iter_bits(g.adj[v] & inside & ((1 << v) - 1)):
                    violations.append((u, v))
    sizes = c.sizes()
    spread = max(sizes) - min(sizes) if sizes else 0
    return VerifyReport(
        proper=not violations,
        equitable=spread <= 1,
        class_count=c.k,
        size_spread=spread,
        violations=sorted(violations),
        missing=missing,
        duplicated=sorted(duplicated),
        out_of_range=sorted(out_of_range),
        expected_k=expected_k,
    )
