"""
Above the window: maxdeg + 1 classes
====================================

Every graph has an equitable coloring with maxdeg + 1 classes. The
fallback handles graphs the main construction does not cover.
"""

from equicolor import generate, hs_delta_plus_one, verify

for p in (0.1, 0.3, 0.5):
    g = generate(f"gnp:40:{p}", seed=1)
    c = hs_delta_plus_one(g)
    print(f"p={p} maxdeg={g.max_degree} sizes={sorted(set(c.sizes()))}", verify(g, c).equitable)
