"""
Exact values three ways
=======================

Brute force handles components of up to 14 vertices, branch and bound goes
to 40, and trees of any size go through a linear dynamic program. Paths and
cycles also have closed forms.
"""

import time

from triroman import graph as G
from triroman.exact import gamma_3R_bnb, gamma_kR_bruteforce
from triroman.families import gamma_cycle, gamma_path
from triroman.treedp import gamma_3R_tree

print(" p  path  cycle")
for p in range(3, 15):
    print(f"{p:2d}  {gamma_path(p)[0]:4d}  {gamma_cycle(p)[0]:5d}")

# The closed forms agree with exhaustive search.
for p in (7, 10, 12):
    assert gamma_kR_bruteforce(G.cycle(p)).weight == gamma_cycle(p)[0]

# Branch and bound on a random graph, single- and multi-threaded.
g = G.random_connected(26, 0.15, seed=4)
for threads in (1, 4):
    t0 = time.perf_counter()
    res = gamma_3R_bnb(g, threads=threads)
    print(f"bnb threads={threads}: weight {res.weight}, {res.nodes_explored} nodes, {time.perf_counter() - t0:.2f}s")

# A random tree with 2000 vertices is no problem for the DP.
t = G.random_tree(2000, seed=1)
t0 = time.perf_counter()
res = gamma_3R_tree(t)
print(f"tree p=2000: {res.weight} ({res.weight / t.p:.3f} per vertex), {time.perf_counter() - t0:.2f}s")
