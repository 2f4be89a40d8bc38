"""
From exact covers to labelings
==============================

Each X3C instance becomes a gadget graph whose optimum is at most
4t + 11q exactly when an exact cover exists. Covers translate to labelings
and optimal labelings translate back.
"""

from triroman.exact import gamma_3R_bnb
from triroman.labeling import is_valid
from triroman.reduction import (
    X3CInstance,
    build_gadget,
    cover_to_labeling,
    labeling_to_cover,
    x3c_bruteforce,
)

yes = X3CInstance(2, ((0, 1, 2), (2, 3, 4), (3, 4, 5), (0, 1, 5)))
no = X3CInstance(2, ((0, 1, 2), (1, 2, 3), (2, 3, 4), (1, 4, 5)))

for inst in (yes, no):
    for variant in ("bipartite", "chordal"):
        g, gm = build_gadget(inst, variant)
        res = gamma_3R_bnb(g)
        cover = x3c_bruteforce(inst)
        print(f"{variant:9s} p={g.p} threshold={gm.threshold} gamma_3R={res.weight} cover={cover}")
        if cover is not None:
            print("   extracted from optimum:", labeling_to_cover(inst, gm, res.witness))

# The forward direction, by hand.
g, gm = build_gadget(yes)
lab = cover_to_labeling(yes, [0, 2], gm)
print("cover [0, 2] ->", lab.weight, "valid:", is_valid(g, lab))
