"""Exact solvers for the [k]-Roman domination number.

* ``gamma_kR_bruteforce`` walks vertices in BFS order over the full label
  alphabet and prunes only on partial validity and incumbent weight.
* ``gamma_3R_bnb`` labels over ``{0, 4, 3, 2}``, branches next to the most
  constrained unsatisfied vertex, and prunes with two lower bounds.

Disconnected graphs are solved component by component and the optima summed.
The module also carries small brute-force oracles for the domination,
Roman and double Roman numbers.
"""

from __future__ import annotations

import enum
import math
import threading
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional, Sequence

from .graph import Graph, components
from .labeling import Labeling, verify_krdf

BRUTEFORCE_LIMIT = 14
BNB_LIMIT = 40
CHAIN_LIMIT = 12


class SizeGuardError(ValueError):
    """A component is larger than a solver is allowed to handle."""

    def __init__(self, solver: str, size: int, limit: int):
        super().__init__(f"{solver}: component with {size} vertices exceeds the limit of {limit}")
        self.solver = solver
        self.size = size
        self.limit = limit


class Method(str, enum.Enum):
    BRUTEFORCE = "bruteforce"
    BNB = "bnb"
    TREEDP = "treedp"
    CLOSEDFORM = "closedform"


@dataclass(frozen=True)
class ComponentResult:
    vertices: tuple[int, ...]
    weight: int
    nodes_explored: int


@dataclass(frozen=True)
class SolveResult:
    weight: int
    witness: Labeling
    method: Method
    nodes_explored: int = 0
    per_component: tuple[ComponentResult, ...] = field(default_factory=tuple)


# -- search engine ---------------------------------------------------------


class _Search:
    """Exhaustive labeling search in a fixed vertex order.

    Prunes when a labelled vertex can no longer reach its requirement even if
    every unlabelled neighbour took the top label, and on incumbent weight.
    """

    def __init__(
        self,
        g: Graph,
        k: int,
        order: Sequence[int],
        labels: Sequence[int],
    ):
        self.p = g.p
        self.k = k
        self.adj = [sorted(g.adjacency[v]) for v in range(g.p)]
        self.order = list(order)
        self.labels = list(labels)
        self.h = [-1] * g.p
        self.sur = [0] * g.p
        self.free = [len(a) for a in self.adj]
        # labelling every vertex k is always valid
        self.best = k * g.p
        self.best_h = [k] * g.p
        self.nodes = 0

    def _assign(self, v: int, x: int) -> None:
        self.h[v] = x
        for u in self.adj[v]:
            self.free[u] -= 1
            if x > 0:
                self.sur[u] += x - 1

    def _unassign(self, v: int, x: int) -> None:
        self.h[v] = -1
        for u in self.adj[v]:
            self.free[u] += 1
            if x > 0:
                self.sur[u] -= x - 1

    def _feasible_around(self, v: int) -> bool:
        k, h, sur, free = self.k, self.h, self.sur, self.free
        for u in (v, *self.adj[v]):
            hu = h[u]
            if 0 <= hu < k and k - hu - sur[u] > k * free[u]:
                return False
        return True

    def run(self, depth: int = 0, weight: int = 0) -> None:
        self.nodes += 1
        if depth == self.p:
            if weight < self.best:
                self.best = weight
                self.best_h = list(self.h)
            return
        v = self.order[depth]
        for x in self.labels:
            w2 = weight + x
            if w2 >= self.best:
                continue
            self._assign(v, x)
            if self._feasible_around(v):
                self.run(depth + 1, w2)
            self._unassign(v, x)


def _bfs_order(g: Graph) -> list[int]:
    order, seen = [], [False] * g.p
    for s in range(g.p):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in sorted(g.adjacency[v]):
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    return order


def _solve_by_components(
    g: Graph,
    k: int,
    method: Method,
    solve_one: Callable[[Graph], tuple[list[int], int]],
) -> SolveResult:
    values = [0] * g.p
    parts = []
    total_nodes = 0
    for comp in components(g):
        sub, old = g.subgraph(comp)
        h, nodes = solve_one(sub)
        for i, v in enumerate(old):
            values[v] = h[i]
        total_nodes += nodes
        parts.append(ComponentResult(tuple(old), sum(h), nodes))
    witness = Labeling(tuple(values), k)
    assert not verify_krdf(g, witness, k)
    return SolveResult(witness.weight, witness, method, total_nodes, tuple(parts))


# -- brute force -----------------------------------------------------------


def gamma_kR_bruteforce(g: Graph, k: int = 3, restrict_no_ones: bool = False) -> SolveResult:
    """Exact [k]-Roman domination number by exhaustive search with pruning.

    ``restrict_no_ones`` drops label 1 from the alphabet. This is exact for
    k = 2 and k = 3, where an optimal function without 1s always exists.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if restrict_no_ones and k not in (2, 3):
        raise ValueError("restrict_no_ones is only exact for k = 2 or k = 3")
    labels = [0, k + 1] + list(range(k, 0, -1))
    if restrict_no_ones:
        labels.remove(1)

    def solve_one(sub: Graph):
        if sub.p > BRUTEFORCE_LIMIT:
            raise SizeGuardError("bruteforce", sub.p, BRUTEFORCE_LIMIT)
        s = _Search(sub, k, _bfs_order(sub), labels)
        s.run()
        return s.best_h, s.nodes

    return _solve_by_components(g, k, Method.BRUTEFORCE, solve_one)


# -- branch and bound ------------------------------------------------------

BNB_LABELS = (0, 4, 3, 2)
# cheapest neighbour labels delivering a surplus of 1, 2, 3
_SUPPLY_COST = (0, 2, 3, 4)
# cheapest way for an unlabelled vertex with residual need n to be satisfied
_SELF_COST = (0, 2, 2, 3)


def degree_lower_bound(p: int, Delta: int, gamma: int) -> int:
    """ceil((2p + (Delta-1) * gamma) / Delta)."""
    return -((-(2 * p + (Delta - 1) * gamma)) // Delta)


def pendant_fixings(g: Graph) -> dict[int, int]:
    """Labels that some optimal 3RDF uses: a vertex with two or more pendant
    neighbours gets 4 and those pendants get 0.

    With two pendants, the vertex and its pendants cost at least 4 under any
    valid labeling, and the 4/0 choice only helps the rest of the graph.
    """
    fixed = {}
    for v in range(g.p):
        leaves = [u for u in g.adjacency[v] if g.degree(u) == 1]
        if len(leaves) >= 2:
            fixed[v] = 4
            for u in leaves:
                fixed[u] = 0
    return fixed


class _SharedBest:
    """Best weight found by any subtree; subtrees prune only strictly above it."""

    def __init__(self, value: int):
        self.value = value
        self._lock = threading.Lock()

    def offer(self, value: int) -> None:
        with self._lock:
            if value < self.value:
                self.value = value


class _BranchAndBound:
    """Labeling search over {0, 4, 3, 2} with dynamic branching.

    At every node the search picks the unsatisfied vertex with the fewest
    unlabelled vertices in its closed neighbourhood and branches on the
    highest-degree one of those. A node with no unsatisfied vertex is
    completed with zeros. The branching choice depends only on the partial
    labeling, so the first optimal leaf found is the same for any incumbent
    above the optimum.

    ``shared`` carries the best weight of sibling subtrees. Pruning against
    it is strict, so a subtree never loses its own first optimal leaf.
    """

    def __init__(
        self,
        g: Graph,
        incumbent: Sequence[int],
        fixed: dict[int, int],
        shared: Optional[_SharedBest] = None,
    ):
        self.p = g.p
        self.adj = [sorted(g.adjacency[v]) for v in range(g.p)]
        self.deg = [len(a) for a in self.adj]
        self.h = [-1] * g.p
        self.sur = [0] * g.p
        self.free = list(self.deg)
        self.best = sum(incumbent)
        self.best_h = list(incumbent)
        self.improved = False
        self.shared = shared
        self.nodes = 0
        self.base = 0
        for v, x in sorted(fixed.items()):
            self._assign(v, x)
            self.base += x

    def _assign(self, v: int, x: int) -> None:
        self.h[v] = x
        for u in self.adj[v]:
            self.free[u] -= 1
            if x > 0:
                self.sur[u] += x - 1

    def _unassign(self, v: int, x: int) -> None:
        self.h[v] = -1
        for u in self.adj[v]:
            self.free[u] += 1
            if x > 0:
                self.sur[u] -= x - 1

    def _feasible_around(self, v: int) -> bool:
        h, sur, free = self.h, self.sur, self.free
        for u in (v, *self.adj[v]):
            hu = h[u]
            if 0 <= hu < 3 and 3 - hu - sur[u] > 3 * free[u]:
                return False
        return True

    def _needs(self) -> list[int]:
        h, sur = self.h, self.sur
        need = [0] * self.p
        for u in range(self.p):
            hu = h[u]
            n = 3 - sur[u] if hu < 0 else 3 - hu - sur[u] if hu < 3 else 0
            if n > 0:
                need[u] = n if n < 3 else 3
        return need

    def _knapsack_bound(self, need: list[int]) -> int:
        # Total residual need must be met; an unlabelled w labelled x removes at
        # most min(x, need[w]) + sum(min(x-1, need[u])) over neighbours u.
        total = sum(need)
        h, adj = self.h, self.adj
        items = []
        for w in range(self.p):
            if h[w] >= 0:
                continue
            nbr = [need[u] for u in adj[w] if need[u]]
            rate, cap = 0.0, 0
            for x in (2, 3, 4):
                s = min(x, need[w]) + sum(n if n < x - 1 else x - 1 for n in nbr)
                if s > cap:
                    cap = s
                if s / x > rate:
                    rate = s / x
            if cap:
                items.append((rate, cap))
        items.sort(reverse=True)
        cost, remaining = 0.0, total
        for rate, cap in items:
            take = cap if cap < remaining else remaining
            cost += take / rate
            remaining -= take
            if remaining <= 0:
                break
        if remaining > 0:
            return 10 * self.p
        return math.ceil(cost - 1e-9)

    def _packing_bound(self, need: list[int]) -> int:
        # Unsatisfied vertices whose unlabelled closed neighbourhoods are
        # pairwise disjoint need separate labels; their cheapest fixes add up.
        h, adj = self.h, self.adj
        cands = []
        for u in range(self.p):
            n = need[u]
            if not n:
                continue
            support = [w for w in adj[u] if h[w] < 0]
            if h[u] < 0:
                support.append(u)
                cost = _SELF_COST[n]
            else:
                cost = _SUPPLY_COST[n]
            cands.append((-cost, len(support), u, support))
        cands.sort()
        used = set()
        total = 0
        for negcost, _, _, support in cands:
            if used.isdisjoint(support):
                used.update(support)
                total -= negcost
        return total

    def _choose(self, need: list[int]) -> int:
        h, adj, deg = self.h, self.adj, self.deg
        best_key, best_support = None, None
        for u in range(self.p):
            if not need[u]:
                continue
            support = [w for w in adj[u] if h[w] < 0]
            if h[u] < 0:
                support.append(u)
            key = (len(support), -need[u], u)
            if best_key is None or key < best_key:
                best_key, best_support = key, support
        return max(best_support, key=lambda w: (deg[w], -w))

    def _cutoff(self) -> int:
        # smallest weight that is pruned
        if self.shared is None:
            return self.best
        return min(self.best, self.shared.value + 1)

    def run(self, prefix: Sequence[int] = (), depth: int = 0, weight: Optional[int] = None) -> None:
        if weight is None:
            weight = self.base
        self.nodes += 1
        need = self._needs()
        if not any(need):
            if weight < self.best:
                self.best = weight
                self.best_h = [x if x >= 0 else 0 for x in self.h]
                self.improved = True
                if self.shared is not None:
                    self.shared.offer(weight)
            return
        lb = max(self._knapsack_bound(need), self._packing_bound(need))
        if weight + lb >= self._cutoff():
            return
        v = self._choose(need)
        labels = (prefix[depth],) if depth < len(prefix) else BNB_LABELS
        for x in labels:
            if weight + x >= self._cutoff():
                continue
            self._assign(v, x)
            if self._feasible_around(v):
                self.run(prefix, depth + 1, weight + x)
            self._unassign(v, x)


def _initial_incumbent(g: Graph) -> list[int]:
    from .bounds import constructive_certificates

    best = None
    for lab in constructive_certificates(g):
        if best is None or lab.weight < sum(best):
            best = list(lab.values)
    return best if best is not None else [3] * g.p


def _bnb_component(g: Graph, threads: int) -> tuple[list[int], int]:
    if g.p > BNB_LIMIT:
        raise SizeGuardError("bnb", g.p, BNB_LIMIT)
    if g.p == 1:
        return [3], 1
    incumbent = _initial_incumbent(g)
    Delta = g.max_degree
    root_lb = degree_lower_bound(g.p, Delta, -(-g.p // (Delta + 1)))
    if sum(incumbent) <= root_lb:
        return incumbent, 1
    fixed = pendant_fixings(g)

    if threads <= 1:
        s = _BranchAndBound(g, incumbent, fixed)
        s.run()
        return s.best_h, s.nodes

    # One subtree per label pair of the first two branching decisions. Each
    # finds its own first optimal leaf and ties go to the earlier subtree,
    # which reproduces the sequential witness.
    prefixes = [(a, b) for a in BNB_LABELS for b in BNB_LABELS]
    shared = _SharedBest(sum(incumbent))

    def work(prefix):
        s = _BranchAndBound(g, incumbent, fixed, shared)
        s.run(prefix)
        return s

    with ThreadPoolExecutor(max_workers=threads) as pool:
        searches = list(pool.map(work, prefixes))
    best_h, best_w = incumbent, sum(incumbent)
    for s in searches:
        if s.improved and s.best < best_w:
            best_h, best_w = s.best_h, s.best
    return best_h, sum(s.nodes for s in searches)


def gamma_3R_bnb(g: Graph, threads: int = 1) -> SolveResult:
    """Exact triple Roman domination number by branch and bound.

    The returned weight and witness do not depend on ``threads``; only the
    node counter does.
    """
    return _solve_by_components(g, 3, Method.BNB, lambda sub: _bnb_component(sub, threads))


# -- classical parameters --------------------------------------------------


def _guard(g: Graph, solver: str, limit: int) -> list[Graph]:
    subs = []
    for comp in components(g):
        if len(comp) > limit:
            raise SizeGuardError(solver, len(comp), limit)
        subs.append(g.subgraph(comp)[0])
    return subs


def domination_number(g: Graph) -> int:
    """Minimum dominating set size by subset enumeration in increasing size."""
    total = 0
    for sub in _guard(g, "domination", BRUTEFORCE_LIMIT):
        closed = [(1 << v) | sum(1 << u for u in sub.adjacency[v]) for v in range(sub.p)]
        full = (1 << sub.p) - 1
        for size in range(1, sub.p + 1):
            if any(_covers(closed, c, full) for c in combinations(range(sub.p), size)):
                total += size
                break
    return total


def _covers(closed, chosen, full) -> bool:
    mask = 0
    for v in chosen:
        mask |= closed[v]
    return mask == full


def _min_predicate_labeling(g: Graph, labels: Sequence[int], ok) -> int:
    """Minimum weight over labelings where ``ok(own, neighbour_labels)`` holds at every vertex."""
    order = _bfs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    # vertex v can be checked once every vertex of N[v] is labelled
    finish_at = [[] for _ in range(g.p)]
    for v in range(g.p):
        last = max(pos[u] for u in g.closed_neighbors(v))
        finish_at[last].append(v)
    h = [-1] * g.p
    best = [max(labels) * g.p + 1]

    def rec(i, weight):
        if weight >= best[0]:
            return
        if i == g.p:
            best[0] = weight
            return
        v = order[i]
        for x in labels:
            h[v] = x
            if all(ok(h[u], [h[w] for w in g.adjacency[u]]) for u in finish_at[i]):
                rec(i + 1, weight + x)
        h[v] = -1

    rec(0, 0)
    return best[0]


def _roman_ok(own, nbrs):
    return own != 0 or 2 in nbrs


def _double_roman_ok(own, nbrs):
    if own == 0:
        return nbrs.count(2) >= 2 or 3 in nbrs
    if own == 1:
        return 2 in nbrs or 3 in nbrs
    return True


def roman_number(g: Graph) -> int:
    """gamma_R: labels {0,1,2}, every 0 has a neighbour labelled 2."""
    return sum(_min_predicate_labeling(s, (0, 2, 1), _roman_ok) for s in _guard(g, "roman", BRUTEFORCE_LIMIT))


def double_roman_number(g: Graph) -> int:
    """gamma_dR: labels {0..3}; a 0 needs two 2-neighbours or a 3-neighbour, a 1 needs a 2- or 3-neighbour."""
    return sum(
        _min_predicate_labeling(s, (0, 3, 2, 1), _double_roman_ok)
        for s in _guard(g, "double_roman", BRUTEFORCE_LIMIT)
    )


@dataclass(frozen=True)
class ChainReport:
    gamma: int
    gamma_R: int
    gamma_dR: int
    gamma_3R: int
    checks: dict

    @property
    def chain_holds(self) -> bool:
        return all(self.checks.values())


def inequality_chain_report(g: Graph) -> ChainReport:
    """Evaluate gamma <= gamma_R <= 2 gamma <= gamma_dR < gamma_3R <= min(3/2 gamma_dR, 4 gamma)."""
    _guard(g, "chain", CHAIN_LIMIT)
    d = domination_number(g)
    r = roman_number(g)
    dr = double_roman_number(g)
    t = gamma_3R_bnb(g).weight
    checks = {
        "gamma<=gamma_R": d <= r,
        "gamma_R<=2gamma": r <= 2 * d,
        "2gamma<=gamma_dR": 2 * d <= dr,
        "gamma_dR<gamma_3R": dr < t,
        "2gamma_3R<=3gamma_dR": 2 * t <= 3 * dr,
        "gamma_3R<=4gamma": t <= 4 * d,
    }
    return ChainReport(d, r, dr, t, checks)
