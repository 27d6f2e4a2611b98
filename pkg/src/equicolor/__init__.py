"""Constructive equitable graph coloring when maxdeg lies between (n + 1) / 3 and n / 2.

For a graph of order at least 6 with ``(n + 1) / 3 <= maxdeg < n / 2`` and
no component isomorphic to ``K_{maxdeg+1}``, :func:`equitable_delta` builds
an equitable coloring with exactly ``maxdeg`` classes.
"""
from .audit import AuditReport, audit_lemma10
from .coloring import Coloring, Profile, VerifyReport, lex_compare, profile_of, verify
from .graph import (
    Graph,
    WindowStatus,
    components,
    edges_between,
    generate,
    parse_dimacs,
    parse_graph6,
    to_graph6,
    window_check,
)
from .oracle import SweepReport, decide_equitable, exact_params, sweep
from .reduce import ReductionStep, balance, balance_step, split_to
from .search import Move, Trace, apply_move, find_improving_move, run_local_search, trivial_coloring
from .solver import (
    ForbiddenComponent,
    OutOfWindow,
    SolveResult,
    Stall,
    StallCertificate,
    Unsupported,
    equitable_delta,
    equitable_k,
    hs_delta_plus_one,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "Coloring",
    "ForbiddenComponent",
    "Graph",
    "Move",
    "OutOfWindow",
    "Profile",
    "ReductionStep",
    "SolveResult",
    "Stall",
    "StallCertificate",
    "SweepReport",
    "Trace",
    "Unsupported",
    "VerifyReport",
    "WindowStatus",
    "apply_move",
    "audit_lemma10",
    "balance",
    "balance_step",
    "components",
    "decide_equitable",
    "edges_between",
    "equitable_delta",
    "equitable_k",
    "exact_params",
    "find_improving_move",
    "generate",
    "hs_delta_plus_one",
    "lex_compare",
    "parse_dimacs",
    "parse_graph6",
    "profile_of",
    "run_local_search",
    "split_to",
    "sweep",
    "to_graph6",
    "trivial_coloring",
    "verify",
    "window_check",
]
