"""
Bounds and where they bite
==========================

best_bounds evaluates every upper and lower bound, reports why some do not
apply, and attaches a verified certificate to the constructive ones.
"""

from triroman import graph as G
from triroman.bounds import best_bounds, randomized_3rdf
from triroman.exact import gamma_3R_bnb

for name, g in [("C5", G.cycle(5)), ("C9", G.cycle(9)), ("P4", G.path(4)), ("K33", G.complete_bipartite(3, 3))]:
    exact = gamma_3R_bnb(g).weight
    rep = best_bounds(g)
    print(f"\n{name}: exact {exact}, best lower {rep.best_lower}, best upper {rep.best_upper}")
    for e in rep.entries:
        if e.applicable:
            flag = "tight" if e.integer_value == exact else ""
            print(f"  {e.name:<18} {e.kind:<5} {str(e.value):>6} {flag}")

# The probabilistic bound comes with a sampler that realises it on average.
g = G.cycle(9)
lab = randomized_3rdf(g, seed=5, trials=200)
print("\nrandomized labeling on C9:", lab.values, "weight", lab.weight)
