"""End-to-end equitable coloring pipelines.

``equitable_delta`` is the main construction: local search to a move-closed
[r, s, t]-coloring, a check that it uses at most Δ classes, splitting up to
exactly Δ classes, then balancing away the singletons.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import networkx as nx
from networkx.algorithms.coloring import equitable_color

from .audit import AuditReport, audit_lemma10
from .coloring import Coloring, Profile, profile_of, verify
from .graph import Graph, WindowStatus, to_graph6, window_check
from .reduce import ReductionStep, balance_steps, split_to
from .search import DEFAULT_RADIUS, Trace, run_local_search

log = logging.getLogger(__name__)


class SolveError(Exception):
    status = "error"

    def to_dict(self) -> dict:
        return {"status": self.status, "message": str(self)}


class OutOfWindow(SolveError):
    status = "out_of_window"

    def __init__(self, window: WindowStatus):
        super().__init__(
            f"order {window.order} with max degree {window.max_degree} is outside the degree window"
        )
        self.window = window

    def to_dict(self) -> dict:
        return {**super().to_dict(), "window": self.window.to_dict()}


class ForbiddenComponent(SolveError):
    status = "forbidden_component"

    def __init__(self, window: WindowStatus):
        block = sorted(window.forbidden_component)
        super().__init__(f"component {block} is a complete graph on maxdeg+1 vertices")
        self.window = window
        self.block = frozenset(block)

    def to_dict(self) -> dict:
        return {**super().to_dict(), "component": sorted(self.block), "window": self.window.to_dict()}


class Unsupported(SolveError):
    status = "unsupported"

    def __init__(self, k: int, sigma: Optional[int], reason: str = ""):
        msg = reason or f"k={k} is below the achieved class count {sigma}"
        super().__init__(msg + " (not a non-existence proof)")
        self.k = k
        self.sigma = sigma

    def to_dict(self) -> dict:
        return {**super().to_dict(), "k": self.k, "sigma": self.sigma}


@dataclass
class StallCertificate:
    """A move-closed coloring of an in-window graph that uses more than Δ classes."""

    graph: Graph
    coloring: Coloring
    profile: Profile
    radius: int
    audit: AuditReport

    def to_dict(self) -> dict:
        return {
            "graph6": to_graph6(self.graph),
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges()],
            "max_degree": self.graph.max_degree,
            "classes": [list(c) for c in self.coloring.classes],
            "profile": list(self.profile),
            "radius": self.radius,
            "audit": self.audit.to_dict(),
        }

    def filename(self) -> str:
        digest = hashlib.sha1(to_graph6(self.graph).encode()).hexdigest()[:16]
        return f"stall_n{self.graph.n}_{digest}.json"

    def write(self, directory) -> Path:
        """Write atomically (temp file + rename) into ``directory``."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        target = directory / self.filename()
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(self.to_dict(), fh, indent=2, sort_keys=True)
        os.replace(tmp, target)
        return target


class Stall(SolveError):
    status = "stall"

    def __init__(self, certificate: StallCertificate):
        super().__init__(
            f"move-closed profile {tuple(certificate.profile)} uses more than "
            f"{certificate.graph.max_degree} classes at radius {certificate.radius}"
        )
        self.certificate = certificate

    def to_dict(self) -> dict:
        return {**super().to_dict(), "certificate": self.certificate.to_dict()}


class HSFailure(RuntimeError):
    def __init__(self, message: str, certificate: dict):
        super().__init__(message)
        self.certificate = certificate


@dataclass
class SolveResult:
    coloring: Coloring
    k: int
    sigma: Optional[int]
    profile_history: dict[str, Optional[Profile]] = field(default_factory=dict)
    trace: Optional[Trace] = None
    reduction: list[ReductionStep] = field(default_factory=list)
    method: str = "delta"

    def to_dict(self, with_trace: bool = False) -> dict:
        out = {
            "status": "ok",
            "k": self.k,
            "classes": [list(c) for c in self.coloring.classes],
            "sizes": sorted(self.coloring.sizes(), reverse=True),
            "sigma": self.sigma,
            "method": self.method,
            "profiles": {
                name: list(p) if p is not None else None for name, p in self.profile_history.items()
            },
        }
        if with_trace:
            out["trace"] = self.trace.to_dict() if self.trace else None
            out["reduction"] = [s.to_dict() for s in self.reduction]
        return out


def _require_window(g: Graph) -> WindowStatus:
    w = window_check(g)
    if not w.in_window:
        raise OutOfWindow(w)
    if w.forbidden_component is not None:
        raise ForbiddenComponent(w)
    return w


def _closed_coloring(g, radius, start, cert_dir):
    closed, trace = run_local_search(g, start, radius=radius)
    p = profile_of(closed)
    if p.classes > g.max_degree:
        cert = StallCertificate(g, closed, p, radius, audit_lemma10(g, closed))
        if cert_dir is not None:
            path = cert.write(cert_dir)
            log.error("stall certificate written to %s", path)
        raise Stall(cert)
    return closed, trace, p


def _finish(g, closed, trace, p, k) -> SolveResult:
    split = split_to(g, closed, k)
    steps = []
    c = split
    for step, c in balance_steps(g, split):
        steps.append(step)
    report = verify(g, c, expected_k=k)
    if not report.ok:
        raise AssertionError(f"pipeline produced an invalid coloring: {report.to_dict()}")
    return SolveResult(
        coloring=c,
        k=k,
        sigma=p.classes,
        profile_history={
            "after_search": p,
            "after_split": profile_of(split),
            "after_balance": profile_of(c),
        },
        trace=trace,
        reduction=steps,
    )


def equitable_delta(
    g: Graph,
    radius: int = DEFAULT_RADIUS,
    start: Optional[Coloring] = None,
    cert_dir=None,
) -> SolveResult:
    """Equitable coloring with exactly Δ classes for a graph in the degree window.

    Raises :class:`OutOfWindow` or :class:`ForbiddenComponent` when the
    hypotheses fail, and :class:`Stall` (writing a certificate to
    ``cert_dir`` if given) when local search ends above Δ classes.
    """
    _require_window(g)
    closed, trace, p = _closed_coloring(g, radius, start, cert_dir)
    return _finish(g, closed, trace, p, g.max_degree)


def equitable_k(
    g: Graph,
    k: int,
    radius: int = DEFAULT_RADIUS,
    start: Optional[Coloring] = None,
    cert_dir=None,
) -> SolveResult:
    """Equitable coloring with ``k`` classes where a construction is available.

    ``k > Δ`` goes through :func:`hs_coloring`; ``σ <= k <= Δ`` (σ the
    class count after local search) goes through split and balance and
    needs the window hypotheses. Smaller ``k`` raises :class:`Unsupported`.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    delta = g.max_degree
    if k > g.n:
        raise Unsupported(k, None, f"k={k} exceeds the order {g.n}")
    if k > delta:
        c = hs_coloring(g, k)
        return SolveResult(c, k, None, {"after_search": None, "after_split": None, "after_balance": None},
                           method="hajnal-szemeredi")
    w = window_check(g)
    if w.ok:
        closed, trace, p = _closed_coloring(g, radius, start, cert_dir)
    else:
        closed, trace = run_local_search(g, start, radius=radius)
        p = profile_of(closed)
    if k < p.classes:
        raise Unsupported(k, p.classes)
    _require_window(g)
    return _finish(g, closed, trace, p, k)


def _to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def hs_coloring(g: Graph, k: int) -> Coloring:
    """Equitable ``k``-coloring for any ``k > Δ`` (Hajnal-Szemerédi).

    Delegates to networkx's constructive Kierstead-Kostochka algorithm and
    re-verifies the result; empty classes are dropped only when ``k > n``.
    """
    if g.n < 1:
        raise ValueError("graph has no vertices")
    if k <= g.max_degree:
        raise ValueError(f"k={k} must exceed the max degree {g.max_degree}")
    labels = equitable_color(_to_networkx(g), k)
    buckets = [[] for _ in range(k)]
    for v in range(g.n):
        buckets[labels[v]].append(v)
    c = Coloring(tuple(tuple(b) for b in buckets if b))
    report = verify(g, c, expected_k=min(k, g.n))
    if not report.ok:
        raise HSFailure(
            f"equitable {k}-coloring failed verification",
            {"graph6": to_graph6(g), "classes": [list(b) for b in buckets], "report": report.to_dict()},
        )
    return c


def hs_delta_plus_one(g: Graph) -> Coloring:
    """Equitable coloring with exactly Δ + 1 classes."""
    return hs_coloring(g, g.max_degree + 1)
