"""
Coloring a graph with exactly maxdeg classes
============================================

A seven-cycle with one chord has maximum degree 3 and sits inside the
degree window, so it can be colored equitably with three classes.
"""

from equicolor import Graph, equitable_delta, verify, window_check

edges = [(i, (i + 1) % 7) for i in range(7)] + [(0, 3)]
g = Graph.from_edges(7, edges)
print(window_check(g).to_dict())

###############################################################################
# The pipeline runs local search, pads the class count up to maxdeg, then
# removes singleton classes one at a time.

res = equitable_delta(g)
for stage, profile in res.profile_history.items():
    print(f"{stage:>14}: {tuple(profile)}")
print("classes:", res.coloring.classes)

###############################################################################
# Always check the answer independently of how it was built.

print(verify(g, res.coloring, expected_k=3).to_dict())
