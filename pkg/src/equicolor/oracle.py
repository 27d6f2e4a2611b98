"""Brute-force ground truth for small graphs, and the corpus sweep harness."""
from __future__ import annotations

import gzip
import hashlib
import itertools
import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Optional

from .coloring import Coloring, verify
from .graph import Graph, iter_bits, parse_graph6, to_graph6, window_check
from .search import DEFAULT_RADIUS
from .solver import SolveError, equitable_delta

DEFAULT_CAP = 16


class OracleCapExceeded(ValueError):
    pass


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise OracleCapExceeded(f"order {g.n} exceeds the oracle cap {cap}")


def decide_equitable(g: Graph, k: int, cap: int = DEFAULT_CAP) -> Optional[Coloring]:
    """Exact search for a proper coloring with ``k`` classes whose sizes differ by at most one.

    Sizes are fixed in advance: ``n mod k`` classes of size ``n//k + 1`` and
    the rest of size ``n//k``. Branches on the unassigned vertex with the
    fewest feasible classes; an empty class is only ever tried once per
    branch since empty classes are interchangeable.
    """
    n = g.n
    if not 1 <= k <= max(n, 1):
        raise ValueError(f"k={k} outside 1..{n}")
    _check_cap(g, cap)
    if n == 0:
        return Coloring(())
    base, big = divmod(n, k)
    adj = g.adj
    members = [0] * k
    sizes = [0] * k
    state = {"big_used": 0}

    def feasible(v: int) -> list[int]:
        out = []
        empty_seen = False
        for c in range(k):
            sz = sizes[c]
            if sz == 0:
                if empty_seen:
                    continue
                empty_seen = True
            if adj[v] & members[c]:
                continue
            if sz > base or (sz == base and state["big_used"] >= big):
                continue
            out.append(c)
        return out

    def rec(unassigned: int) -> bool:
        if not unassigned:
            return True
        best_v, best_opts = -1, None
        for v in iter_bits(unassigned):
            opts = feasible(v)
            if not opts:
                return False
            if best_opts is None or len(opts) < len(best_opts):
                best_v, best_opts = v, opts
                if len(opts) == 1:
                    break
        bit = 1 << best_v
        for c in best_opts:
            grows_big = sizes[c] == base
            members[c] |= bit
            sizes[c] += 1
            if grows_big:
                state["big_used"] += 1
            if rec(unassigned ^ bit):
                return True
            members[c] ^= bit
            sizes[c] -= 1
            if grows_big:
                state["big_used"] -= 1
        return False

    if not rec(g.full_mask):
        return None
    return Coloring(tuple(tuple(iter_bits(m)) for m in members))


def naive_decide_equitable(g: Graph, k: int) -> bool:
    """Enumerate all ``k**n`` labelings; only for very small graphs."""
    edges = g.edges()
    for labels in itertools.product(range(k), repeat=g.n):
        if any(labels[u] == labels[v] for u, v in edges):
            continue
        counts = Counter(labels)
        sizes = [counts.get(c, 0) for c in range(k)]
        if max(sizes) - min(sizes) <= 1:
            return True
    return False


def is_colorable(g: Graph, k: int) -> bool:
    """Plain proper k-colorability (no size constraint), by backtracking."""
    adj = g.adj
    members = [0] * k

    def rec(v: int, used: int) -> bool:
        if v == g.n:
            return True
        for c in range(min(used + 1, k)):
            if not adj[v] & members[c]:
                members[c] |= 1 << v
                if rec(v + 1, max(used, c + 1)):
                    return True
                members[c] ^= 1 << v
        return False

    return rec(0, 0)


def independence_number(g: Graph) -> int:
    """Maximum independent set size by bitset branch and bound."""
    best = 0

    def rec(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rec(size + 1, cand & ~g.adj[v] & ~low)
        rec(size, cand & ~low)

    rec(0, g.full_mask)
    return best


class ExactParams(NamedTuple):
    chi: int
    chi_eq: int
    chi_eq_star: int
    alpha: int


def equitable_spectrum(g: Graph, cap: int = DEFAULT_CAP) -> dict[int, bool]:
    """Equitable ``k``-colorability for every ``k`` in ``1..n``."""
    _check_cap(g, cap)
    return {k: decide_equitable(g, k, cap) is not None for k in range(1, g.n + 1)}


def exact_params(g: Graph, cap: int = DEFAULT_CAP) -> ExactParams:
    """Chromatic number, equitable chromatic number and threshold, independence number.

    The threshold is computed from the full spectrum ``k = 1..n``; beyond
    ``n`` every ``k`` works trivially when empty classes are allowed.
    """
    _check_cap(g, cap)
    if g.n == 0:
        return ExactParams(0, 0, 0, 0)
    chi = next(k for k in range(1, g.n + 1) if is_colorable(g, k))
    spec = equitable_spectrum(g, cap)
    chi_eq = min(k for k, ok in spec.items() if ok)
    star = g.n
    for k in range(g.n, 0, -1):
        if not spec[k]:
            break
        star = k
    return ExactParams(chi, chi_eq, star, independence_number(g))


# ---------------------------------------------------------------------------
# corpus sweep

SOLVED = "in_window_solved"
OUT_OF_WINDOW = "out_of_window_skipped"
FORBIDDEN = "forbidden_component_skipped"
STALL = "stall"
VERIFY_FAIL = "verification_failure"
ORACLE_FAIL = "oracle_disagreement"
DISPOSITIONS = (SOLVED, OUT_OF_WINDOW, FORBIDDEN, STALL, VERIFY_FAIL, ORACLE_FAIL)


@dataclass
class SweepReport:
    totals: dict[str, int] = field(default_factory=lambda: {d: 0 for d in DISPOSITIONS})
    failures: list[dict] = field(default_factory=list)
    by_order: dict[int, dict[str, int]] = field(default_factory=dict)
    sigma_histogram: dict[int, int] = field(default_factory=dict)
    digest: str = ""
    runtime: dict[str, float] = field(default_factory=dict)

    @property
    def corpus_size(self) -> int:
        return sum(self.totals.values())

    @property
    def ok(self) -> bool:
        return not (self.totals[STALL] or self.totals[VERIFY_FAIL] or self.totals[ORACLE_FAIL])

    def to_dict(self, with_runtime: bool = True) -> dict:
        out = {
            "corpus_size": self.corpus_size,
            "totals": self.totals,
            "by_order": {str(n): v for n, v in sorted(self.by_order.items())},
            "sigma_minus_delta": {str(k): v for k, v in sorted(self.sigma_histogram.items())},
            "failures": self.failures,
            "digest": self.digest,
        }
        if with_runtime:
            out["runtime"] = self.runtime
        return out

    def to_json(self, with_runtime: bool = True) -> str:
        return json.dumps(self.to_dict(with_runtime), indent=2, sort_keys=True)

    def summary(self) -> str:
        lines = [f"{'disposition':<32}{'count':>10}"]
        lines += [f"{d:<32}{self.totals[d]:>10}" for d in DISPOSITIONS]
        lines.append(f"{'total':<32}{self.corpus_size:>10}")
        if self.runtime:
            lines.append(f"elapsed {self.runtime.get('elapsed_s', 0.0):.2f}s")
        return "\n".join(lines)


def _classify(code: str, radius: int, cross_check: bool, cap: int, cert_dir=None) -> dict:
    g = parse_graph6(code)
    w = window_check(g)
    rec = {"graph6": code, "n": g.n}
    if not w.in_window:
        rec["disposition"] = OUT_OF_WINDOW
        return rec
    if w.forbidden_component is not None:
        rec["disposition"] = FORBIDDEN
        return rec
    try:
        res = equitable_delta(g, radius=radius, cert_dir=cert_dir)
    except SolveError as exc:
        rec["disposition"] = STALL if exc.status == "stall" else VERIFY_FAIL
        rec["detail"] = str(exc)
        return rec
    report = verify(g, res.coloring, expected_k=w.max_degree)
    rec["classes"] = [list(c) for c in res.coloring.classes]
    rec["sigma_minus_delta"] = res.sigma - w.max_degree
    if not report.ok:
        rec["disposition"] = VERIFY_FAIL
        rec["detail"] = json.dumps(report.to_dict(), sort_keys=True)
        return rec
    if cross_check and g.n <= cap:
        witness = decide_equitable(g, w.max_degree, cap)
        if witness is None or not verify(g, witness, expected_k=w.max_degree).ok:
            rec["disposition"] = ORACLE_FAIL
            rec["detail"] = "oracle found no equitable coloring" if witness is None else "oracle witness invalid"
            return rec
    rec["disposition"] = SOLVED
    return rec


def _classify_batch(args) -> list[dict]:
    codes, radius, cross_check, cap, cert_dir = args
    return [_classify(code, radius, cross_check, cap, cert_dir) for code in codes]


def _batches(codes: Iterable[str], size: int) -> Iterator[list[str]]:
    it = iter(codes)
    while True:
        chunk = list(itertools.islice(it, size))
        if not chunk:
            return
        yield chunk


def sweep(
    corpus: Iterable,
    radius: int = DEFAULT_RADIUS,
    cross_check: bool = True,
    jobs: int = 1,
    cap: int = DEFAULT_CAP,
    batch_size: int = 256,
    cert_dir=None,
) -> SweepReport:
    """Run the Δ-coloring pipeline over a corpus of graphs (or graph6 strings).

    Never stops at a failure: each graph gets exactly one disposition, and
    failing graphs are recorded with their graph6 code for replay. The
    ``digest`` covers every per-graph outcome in corpus order, so two runs
    agree on it iff they produced the same colorings. Stall certificates go
    to ``cert_dir`` when it is given.
    """
    start = time.perf_counter()
    codes = (x if isinstance(x, str) else to_graph6(x) for x in corpus)
    tasks = ((chunk, radius, cross_check, cap, cert_dir) for chunk in _batches(codes, batch_size))
    report = SweepReport()
    h = hashlib.sha256()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_classify_batch, tasks)
            for batch in results:
                _merge(report, batch, h)
    else:
        for task in tasks:
            _merge(report, _classify_batch(task), h)
    report.digest = h.hexdigest()
    report.runtime = {"elapsed_s": time.perf_counter() - start}
    return report


def _merge(report: SweepReport, batch: list[dict], h) -> None:
    for rec in batch:
        d = rec["disposition"]
        report.totals[d] += 1
        per = report.by_order.setdefault(rec["n"], {x: 0 for x in DISPOSITIONS})
        per[d] += 1
        if "sigma_minus_delta" in rec:
            key = rec["sigma_minus_delta"]
            report.sigma_histogram[key] = report.sigma_histogram.get(key, 0) + 1
        if d not in (SOLVED, OUT_OF_WINDOW, FORBIDDEN):
            report.failures.append({k: rec[k] for k in ("graph6", "n", "disposition", "detail") if k in rec})
        h.update(json.dumps(rec, sort_keys=True).encode())
        h.update(b"\n")


def read_fixture(path) -> Iterator[str]:
    """graph6 codes from a fixture file, transparently gunzipping ``.gz``."""
    path = Path(path)
    opener = gzip.open if path.suffix == ".gz" else open
    with opener(path, "rt") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith(">>"):
                yield line
