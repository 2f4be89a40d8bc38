"""Linear-time triple Roman domination on trees.

Root the tree and keep, for every vertex ``v``, a table indexed by
``(label, surplus)`` where ``label`` is in ``{0, 2, 3, 4}`` and ``surplus``
is the amount already supplied to ``v`` by its children, capped at 3. The
entry is the lightest labeling of the subtree below ``v`` in which every
descendant is satisfied. A child in state ``(c, s_c)`` can hang below a
parent labelled ``l`` when ``s_c + max(0, l - 1) >= need(c)``, and it moves
the parent's surplus up by ``max(0, c - 1)``.

Label 1 is never needed: some optimal function avoids it.
"""

from __future__ import annotations

from .exact import Method, SolveResult, ComponentResult
from .graph import Graph, is_tree
from .labeling import Labeling, verify_krdf

LABELS = (0, 2, 3, 4)
CAP = 3
INF = float("inf")


def need(label: int) -> int:
    return max(0, 3 - label)


def _rooted(t: Graph, root: int):
    parent = [-1] * t.p
    order = [root]
    seen = [False] * t.p
    seen[root] = True
    for v in order:
        for u in sorted(t.adjacency[v]):
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                order.append(u)
    children = [[] for _ in range(t.p)]
    for v in order[1:]:
        children[parent[v]].append(v)
    return order, children


def gamma_3R_tree(t: Graph, root: int = 0) -> SolveResult:
    if not is_tree(t):
        raise ValueError("gamma_3R_tree needs a tree")
    if t.p == 1:
        witness = Labeling((3,), 3)
        return SolveResult(3, witness, Method.TREEDP, 1, (ComponentResult((0,), 3, 1),))

    order, children = _rooted(t, root)
    # table[v][label][s]: min cost of the subtree at v in state (label, s).
    # steps[v][label][i][s]: (surplus before child i, child state) realising s.
    table = {}
    steps = {}
    for v in reversed(order):
        rows = {}
        trails = {}
        for label in LABELS:
            give = max(0, label - 1)
            cur = [INF] * (CAP + 1)
            cur[0] = label
            trail = []
            for c in children[v]:
                # cheapest child state for each surplus contribution it can make
                best_by_contrib = {}
                for cl in LABELS:
                    contrib = max(0, cl - 1)
                    for sc in range(CAP + 1):
                        cost = table[c][cl][sc]
                        if cost == INF or sc + give < need(cl):
                            continue
                        if contrib not in best_by_contrib or cost < best_by_contrib[contrib][0]:
                            best_by_contrib[contrib] = (cost, (cl, sc))
                nxt = [INF] * (CAP + 1)
                step = [None] * (CAP + 1)
                for s in range(CAP + 1):
                    if cur[s] == INF:
                        continue
                    for contrib, (cost, state) in sorted(best_by_contrib.items()):
                        s2 = min(CAP, s + contrib)
                        if cur[s] + cost < nxt[s2]:
                            nxt[s2] = cur[s] + cost
                            step[s2] = (s, state)
                cur = nxt
                trail.append(step)
            rows[label] = cur
            trails[label] = trail
        table[v] = rows
        steps[v] = trails

    best, arg = INF, None
    for label in LABELS:
        for s in range(CAP + 1):
            if s >= need(label) and table[root][label][s] < best:
                best, arg = table[root][label][s], (label, s)

    values = [0] * t.p
    stack = [(root, arg)]
    while stack:
        v, (label, s) = stack.pop()
        values[v] = label
        trail = steps[v][label]
        for i in range(len(children[v]) - 1, -1, -1):
            s_prev, state = trail[i][s]
            stack.append((children[v][i], state))
            s = s_prev
    witness = Labeling(tuple(values), 3)
    assert witness.weight == best and not verify_krdf(t, witness, 3)
    return SolveResult(int(best), witness, Method.TREEDP, t.p, (ComponentResult(tuple(range(t.p)), int(best), t.p),))
