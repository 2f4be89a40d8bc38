"""
Triple Roman dominating functions
=================================

A labeling h: V -> {0, 1, 2, 3, 4} is a triple Roman dominating function
(3RDF) when every vertex with h(v) < 3 collects at least |AN(v)| + 3 over
its active closed neighbourhood. Equivalently each active neighbour w hands
over a surplus h(w) - 1 and v needs 3 - h(v) of it.
"""

from triroman import graph as G
from triroman.labeling import Labeling, eliminate_ones, surplus, verify_3rdf

# K_{3,4}: one 4 on each side dominates everything.
k34 = G.complete_bipartite(3, 4)
lab = Labeling((4, 0, 0, 4, 0, 0, 0))
print("K34", lab.values, "weight", lab.weight, "violations", verify_3rdf(k34, lab))

# The 5-cycle, with a 3 and two adjacent 2s.
c5 = G.cycle(5)
lab = Labeling((3, 0, 2, 2, 0))
print("C5 ", lab.values, "weight", lab.weight, "violations", verify_3rdf(c5, lab))

# Two 2s are not enough for a 0-vertex: each only passes on a surplus of 1.
c4 = G.cycle(4)
bad = Labeling((2, 0, 2, 2))
for v in verify_3rdf(c4, bad):
    print(f"vertex {v.vertex}: h(AN[v]) = {v.achieved}, needs {v.required}, surplus {surplus(c4, bad.values, v.vertex)}")

# Labels 1 are never needed: eliminate_ones rewrites them away without
# adding weight.
p4 = G.path(4)
with_one = Labeling((3, 1, 4, 0))
print("before", with_one.values, with_one.weight)
after = eliminate_ones(p4, with_one)
print("after ", after.values, after.weight)
