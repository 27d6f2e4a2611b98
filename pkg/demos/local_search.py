"""
Lexicographic ascent of [r, s, t] profiles
==========================================

Local search starts from singletons and repeatedly repartitions a few
classes into more triples, or the same triples and more pairs.
"""

from equicolor import audit_lemma10, generate, run_local_search
from equicolor.search import step_bound

g = generate("window:14:0.3", seed=7)
print(f"n={g.n} edges={g.edge_count} maxdeg={g.max_degree}")

coloring, trace = run_local_search(g)
for move, profile in trace.steps:
    print(f"repartition classes {move.sources} -> {tuple(profile)}")

###############################################################################
# The profile strictly increases, so the number of moves is bounded.

print("strictly increasing:", trace.is_strictly_increasing())
print(f"moves: {len(trace.steps)} (bound {step_bound(g.n)})")

###############################################################################
# A coloring with no improving move satisfies a list of structural facts;
# the audit reports any that fail.

print("audit violations:", audit_lemma10(g, coloring).violations)
