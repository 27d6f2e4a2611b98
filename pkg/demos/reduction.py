"""
Splitting triples and balancing singletons
==========================================

Given a compact coloring, ``split_to`` raises the class count and
``balance`` trades each singleton away while the class count stays fixed.
"""

from equicolor import Coloring, Graph, balance, profile_of, split_to
from equicolor.reduce import balance_steps

# vertex 11 sees five triple vertices and vertex 12
g = Graph.from_edges(13, [(11, v) for v in range(5)] + [(11, 12)])
c = Coloring(((0, 1, 2), (3, 4, 5), (6, 7, 8), (9, 10), (11,), (12,)))
print("start:", tuple(profile_of(c)), "maxdeg:", g.max_degree)

for step, after in balance_steps(g, c):
    print(f"{step.case_tag:>16}: {step.touched_classes} -> {step.replacement}  {tuple(profile_of(after))}")

###############################################################################
# Splitting takes the last vertex out of a triple as a new singleton.

c9 = Graph.from_edges(9, [(v, (v + d) % 9) for v in range(9) for d in (1, 2)])
three = Coloring(((0, 3, 6), (1, 4, 7), (2, 5, 8)))
four = split_to(c9, three, 4)
print(tuple(profile_of(four)), four.classes)
print(tuple(profile_of(balance(c9, four))))
