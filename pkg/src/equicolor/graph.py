"""Simple undirected graphs stored as integer bitset adjacency.

Vertices are ``0..n-1``. ``adj[v]`` is an ``int`` whose bit ``u`` is set iff
``u`` and ``v`` are adjacent. Python integers are unbounded, so there is no
order cap; for the small graphs the sweep works on every mask fits in one
machine word anyway.
"""
from __future__ import annotations

import json
import logging
import random
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Union

log = logging.getLogger(__name__)

VertexSet = Union[int, Iterable[int]]


class GraphFormatError(ValueError):
    """Raised when a DIMACS or graph6 input cannot be decoded."""


class GenerationError(RuntimeError):
    """Raised when a conditioned generator exhausts its retry budget."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    edge_count: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for order {self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "edge_count", sum(r.bit_count() for r in self.adj) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("order must be non-negative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def order(self) -> int:
        return self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.adj[v]))

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in iter_bits(self.adj[v] & ((1 << v) - 1))]

    def mask(self, vertices: VertexSet) -> int:
        """Bitmask for ``vertices``; an ``int`` is taken to be a mask already."""
        if isinstance(vertices, int):
            m = vertices
        else:
            m = 0
            for v in vertices:
                m |= 1 << v
        if m & ~self.full_mask or m < 0:
            raise ValueError(f"vertex set {vertices!r} is not contained in 0..{self.n - 1}")
        return m

    def is_independent(self, vertices: VertexSet) -> bool:
        m = self.mask(vertices)
        return all(not (self.adj[v] & m) for v in iter_bits(m))

    def induced_edge_count(self, vertices: VertexSet) -> int:
        m = self.mask(vertices)
        return sum((self.adj[v] & m).bit_count() for v in iter_bits(m)) // 2

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges()]})

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        data = json.loads(text)
        return cls.from_edges(int(data["n"]), (tuple(e) for e in data["edges"]))


def edges_between(g: Graph, x: VertexSet, y: VertexSet) -> int:
    """Number of edges with one endpoint in ``x`` and the other in ``y``.

    Each edge is counted once, including edges lying entirely inside the
    overlap of ``x`` and ``y``, so the count stays symmetric in its arguments.
    """
    mx, my = g.mask(x), g.mask(y)
    ordered = sum((g.adj[v] & my).bit_count() for v in iter_bits(mx))
    return ordered - g.induced_edge_count(mx & my)


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by their smallest vertex."""
    seen = 0
    blocks = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        blocks.append(frozenset(iter_bits(comp)))
    return blocks


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph.from_edges(offset, edges)


@dataclass(frozen=True)
class WindowStatus:
    order: int
    max_degree: int
    in_window: bool
    forbidden_component: Optional[frozenset[int]] = None

    @property
    def ok(self) -> bool:
        """True when the graph meets every hypothesis of the maxdeg-class construction."""
        return self.in_window and self.forbidden_component is None

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "max_degree": self.max_degree,
            "in_window": self.in_window,
            "forbidden_component": sorted(self.forbidden_component)
            if self.forbidden_component is not None
            else None,
        }


def in_degree_window(n: int, delta: int) -> bool:
    return n >= 6 and 3 * delta >= n + 1 and 2 * delta < n


def window_check(g: Graph) -> WindowStatus:
    delta = g.max_degree
    forbidden = None
    for block in components(g):
        if len(block) == delta + 1 and g.induced_edge_count(block) == delta * (delta + 1) // 2:
            forbidden = block
            break
    return WindowStatus(g.n, delta, in_degree_window(g.n, delta), forbidden)


# ---------------------------------------------------------------------------
# DIMACS


def parse_dimacs(text: str, strict_edge_count: bool = False) -> Graph:
    """Read a DIMACS ``.col`` graph (``p edge n m`` header, 1-indexed ``e`` lines).

    Duplicate edges are merged. A mismatch between the declared and actual
    edge count raises when ``strict_edge_count`` is set and warns otherwise.
    """
    n = None
    declared = 0
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "edges", "col"):
                raise GraphFormatError(f"line {lineno}: malformed header {raw!r}")
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed header {raw!r}") from None
            if n < 0 or declared < 0:
                raise GraphFormatError(f"line {lineno}: negative size in header")
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            if len(parts) < 3:
                raise GraphFormatError(f"line {lineno}: malformed edge {raw!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed edge {raw!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: vertex index out of range 1..{n}")
            if u == v:
                raise GraphFormatError(f"line {lineno}: loop at vertex {u}")
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise GraphFormatError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise GraphFormatError("missing problem line")
    if len(edges) != declared:
        msg = f"header declares {declared} edges, found {len(edges)} distinct"
        if strict_edge_count:
            raise GraphFormatError(msg)
        warnings.warn(msg, stacklevel=2)
    return Graph.from_edges(n, sorted(edges))


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6


def _decode_order(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 4 and data[1] != 126:
        return _six_bit_int(data[1:4]), 4
    if len(data) >= 8 and data[1] == 126:
        return _six_bit_int(data[2:8]), 8
    raise GraphFormatError("truncated graph6 order field")


def _six_bit_int(chunk: bytes) -> int:
    value = 0
    for c in chunk:
        value = (value << 6) | (c - 63)
    return value


def parse_graph6(line: str) -> Graph:
    """Decode a single graph6 string (an optional ``>>graph6<<`` prefix is allowed)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii", errors="replace")
    if any(c < 63 or c > 126 for c in data):
        raise GraphFormatError(f"invalid graph6 character in {line!r}")
    n, offset = _decode_order(data)
    body = data[offset:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(
            f"graph6 body has {len(body)} characters, expected {(nbits + 5) // 6} for order {n}"
        )
    bits = 0
    for c in body:
        bits = (bits << 6) | (c - 63)
    pad = 6 * len(body) - nbits
    if bits & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits in graph6 body")
    bits >>= pad
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = chr(n + 63)
    elif n < 258048:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        head = "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    bits = [g.adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return head + body


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


# ---------------------------------------------------------------------------
# generators


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def hypercube(d: int) -> Graph:
    n = 1 << d
    return Graph.from_edges(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)])


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    if n < 0 or not 0.0 <= p <= 1.0:
        raise ValueError(f"invalid G(n, p) parameters n={n}, p={p}")
    rng = random.Random(seed)
    return Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


def gnp_in_window(n: int, p: float, seed: int = 0, max_tries: int = 1000) -> Graph:
    """G(n, p) conditioned on passing :func:`window_check`, by rejection sampling."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        g = gnp(n, p, seed=rng.getrandbits(64))
        if window_check(g).ok:
            return g
    raise GenerationError(f"no in-window G({n}, {p}) sample within {max_tries} tries")


_GENERATORS = {
    "complete": (complete, (int,)),
    "empty": (empty, (int,)),
    "cycle": (cycle, (int,)),
    "path": (path, (int,)),
    "complete_bipartite": (complete_bipartite, (int, int)),
    "hypercube": (hypercube, (int,)),
    "gnp": (gnp, (int, float)),
    "window": (gnp_in_window, (int, float)),
}


def generate(kind: str, seed: int = 0) -> Graph:
    """Build a graph from a spec string such as ``"cycle:5"`` or ``"gnp:10:0.4"``.

    Random kinds (``gnp``, ``window``) are deterministic for a fixed seed.
    """
    name, *args = kind.split(":")
    if name not in _GENERATORS:
        raise ValueError(f"unknown generator {name!r}; choose from {sorted(_GENERATORS)}")
    fn, types = _GENERATORS[name]
    if len(args) != len(types):
        raise ValueError(f"generator {name!r} takes {len(types)} parameter(s)")
    values = [t(a) for t, a in zip(types, args)]
    if any(v < 0 for v in values):
        raise ValueError(f"negative parameter in {kind!r}")
    if name in ("gnp", "window"):
        return fn(*values, seed=seed)
    return fn(*values)
