"""
Equitable colorability is not monotone in k
===========================================

With three classes of size two, every class lies inside one side of
K_{3,3}, and a side of three vertices cannot be cut into pairs.
"""

from equicolor import decide_equitable, exact_params, generate

g = generate("complete_bipartite:3:3")
for k in range(1, 7):
    witness = decide_equitable(g, k)
    print(k, "yes" if witness else "no", witness.classes if witness else "")

print(exact_params(g))
