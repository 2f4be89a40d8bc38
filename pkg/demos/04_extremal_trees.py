"""
Trees that reach 7p/4
=====================

Every tree on p >= 3 vertices has gamma_3R <= 7p/4. The trees that reach it
are built from P4 blocks hooked together through their second vertices;
joining those vertices by any connected graph gives the general extremal family.
"""

import random

from triroman import graph as G
from triroman.exact import gamma_3R_bnb
from triroman.families import gen_family_F, gen_family_H
from triroman.treedp import gamma_3R_tree

for k in range(1, 6):
    t = gen_family_F(k, seed=k)
    print(f"F, k={k}: p={t.p}, gamma_3R={gamma_3R_tree(t).weight}, 7p/4={7 * t.p / 4}")

h = gen_family_H(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
print(f"H with 4 blocks: p={h.p}, gamma_3R={gamma_3R_bnb(h).weight}")

# Random trees sit well below the line.
rng = random.Random(0)
ratios = []
for _ in range(300):
    t = G.random_tree(rng.randint(3, 60), rng.randrange(10**6))
    ratios.append(gamma_3R_tree(t).weight / t.p)
print(f"random trees: max ratio {max(ratios):.3f}, mean {sum(ratios) / len(ratios):.3f} (limit 1.75)")
