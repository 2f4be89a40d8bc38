"""Upper and lower bounds on the triple Roman domination number.

Each bound is reported as a :class:`BoundEntry` carrying an applicability
flag with a reason, an exact value, and, where the bound comes from an
explicit construction, a certificate labeling whose weight realises it.
Rational bounds are held as :class:`fractions.Fraction` and only floored or
ceiled for presentation.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .exact import (
    BRUTEFORCE_LIMIT,
    SizeGuardError,
    degree_lower_bound,
    domination_number,
    double_roman_number,
)
from .graph import Graph, bfs_distances, components, struct_report
from .labeling import Labeling, verify_krdf

Number = Union[int, Fraction]


@dataclass(frozen=True)
class BoundEntry:
    name: str
    kind: str  # "upper" or "lower"
    value: Optional[Number]
    applicable: bool
    reason: str = ""
    certificate: Optional[Labeling] = None

    @property
    def integer_value(self) -> Optional[int]:
        """Best integer implied by the bound: floor for upper, ceiling for lower."""
        if self.value is None:
            return None
        if self.kind == "upper":
            return math.floor(self.value)
        return math.ceil(self.value)

    def brackets(self, exact: int) -> bool:
        """Compare exactly against an optimum, cross-multiplying rationals."""
        if not self.applicable:
            return True
        if self.kind == "upper":
            return exact <= self.value
        return exact >= self.value

    def to_dict(self) -> dict:
        v = self.value
        return {
            "name": self.name,
            "kind": self.kind,
            "applicable": self.applicable,
            "reason": self.reason,
            "value": None if v is None else str(v),
            "integer_value": self.integer_value,
            "certificate": None if self.certificate is None else list(self.certificate.values),
        }


def _na(name: str, kind: str, reason: str) -> BoundEntry:
    return BoundEntry(name, kind, None, False, reason)


def _certified(name: str, value: int, g: Graph, values: list[int], reason: str = "") -> BoundEntry:
    cert = Labeling(tuple(values), 3)
    if verify_krdf(g, cert, 3) or cert.weight > value:
        raise AssertionError(f"{name}: construction failed on this graph")
    return BoundEntry(name, "upper", value, True, reason, cert)


def _max_degree_vertex(g: Graph) -> int:
    return max(range(g.p), key=lambda v: (g.degree(v), -v))


# -- upper bounds ----------------------------------------------------------


def ub_trivial(g: Graph) -> BoundEntry:
    """2p, certified by labelling every vertex 2."""
    if any(len(c) < 2 for c in components(g)):
        return _na("trivial_2p", "upper", "needs every component to have at least 2 vertices")
    return _certified("trivial_2p", 2 * g.p, g, [2] * g.p)


def _max_degree_values(g: Graph) -> list[int]:
    v = _max_degree_vertex(g)
    h = [3] * g.p
    h[v] = 4
    for w in g.adjacency[v]:
        h[w] = 0
    return h


def ub_max_degree(g: Graph) -> BoundEntry:
    """3p - 3*Delta + 1: a max-degree vertex gets 4, its neighbours 0, everything else 3.

    On a disconnected graph the construction is applied per component
    (an isolated vertex gets 3) and the values are summed.
    """
    comps = components(g)
    if len(comps) == 1:
        if g.p < 2:
            return _na("max_degree", "upper", "needs p >= 2")
        return _certified("max_degree", 3 * g.p - 3 * g.max_degree + 1, g, _max_degree_values(g))
    h = [3] * g.p
    total = 0
    for comp in comps:
        sub, old = g.subgraph(comp)
        if sub.p == 1:
            total += 3
            continue
        local = _max_degree_values(sub)
        for i, v in enumerate(old):
            h[v] = local[i]
        total += 3 * sub.p - 3 * sub.max_degree + 1
    return _certified("max_degree", total, g, h, "disconnected: summed over components")


def ub_max_degree_girth4(g: Graph) -> BoundEntry:
    """3p - 3*Delta when girth >= 4, Delta <= p-2 and delta >= 2 (centre relabelled 3)."""
    rep = struct_report(g)
    if not rep.is_connected or g.p < 2:
        return _na("max_degree_girth4", "upper", "needs a connected graph with p >= 2")
    if rep.girth is not None and rep.girth < 4:
        return _na("max_degree_girth4", "upper", f"girth {rep.girth} < 4")
    if rep.Delta > g.p - 2:
        return _na("max_degree_girth4", "upper", "needs Delta <= p - 2")
    if rep.delta < 2:
        return _na("max_degree_girth4", "upper", "needs delta >= 2")
    h = _max_degree_values(g)
    h[_max_degree_vertex(g)] = 3
    return _certified("max_degree_girth4", 3 * g.p - 3 * rep.Delta, g, h)


def ub_girth5(g: Graph) -> BoundEntry:
    """2p - 2*Delta + 1 when delta >= 2 and girth >= 5."""
    rep = struct_report(g)
    if not rep.is_connected or g.p < 2:
        return _na("girth5", "upper", "needs a connected graph with p >= 2")
    if rep.delta < 2:
        return _na("girth5", "upper", f"minimum degree {rep.delta} < 2")
    if rep.girth < 5:
        return _na("girth5", "upper", f"girth {rep.girth} < 5")
    v = _max_degree_vertex(g)
    h = [2] * g.p
    h[v] = 3
    for w in g.adjacency[v]:
        h[w] = 0
    return _certified("girth5", 2 * g.p - 2 * rep.Delta + 1, g, h)


def ub_regular_girth7(g: Graph) -> BoundEntry:
    """2p - 2r^2 + 3r - 2 for connected r-regular graphs of girth >= 7.

    Certificate from the BFS levels of vertex 0: level 1 gets 3, levels 0
    and 2 get 0, everything further out gets 2.
    """
    rep = struct_report(g)
    if not rep.is_connected:
        return _na("regular_girth7", "upper", "needs a connected graph")
    if rep.is_regular is None or rep.is_regular < 2:
        return _na("regular_girth7", "upper", "needs an r-regular graph with r >= 2")
    if rep.girth < 7:
        return _na("regular_girth7", "upper", f"girth {rep.girth} < 7")
    r = rep.is_regular
    dist = bfs_distances(g, 0)
    h = [{0: 0, 1: 3, 2: 0}.get(d, 2) for d in dist]
    return _certified("regular_girth7", 2 * g.p - 2 * r * r + 3 * r - 2, g, h)


def probabilistic_probability(delta: int) -> float:
    """Sampling probability ln(3(delta+1)/4) / (delta+1)."""
    return math.log(3 * (delta + 1) / 4) / (delta + 1)


def ub_probabilistic(g: Graph) -> BoundEntry:
    """floor(4p/(delta+1) * (ln(3(delta+1)/4) + 1)), valid when the sampling probability lies in (0, 1)."""
    delta = g.min_degree
    prob = probabilistic_probability(delta)
    if not 0 < prob < 1:
        return _na("probabilistic", "upper", f"sampling probability {prob:.4f} outside (0, 1)")
    value = math.floor(4 * g.p / (delta + 1) * (math.log(3 * (delta + 1) / 4) + 1))
    return BoundEntry("probabilistic", "upper", value, True)


def randomized_3rdf(g: Graph, seed: int = 0, trials: int = 64, prob: Optional[float] = None) -> Labeling:
    """Lightest of ``trials`` random labelings: a random set A gets 4, N(A) gets 0, the rest 3.

    Each trial draws from its own child of ``SeedSequence(seed)``, so the
    outcome does not depend on the order trials are evaluated in.
    """
    if prob is None:
        prob = probabilistic_probability(g.min_degree)
    if not 0 < prob < 1:
        raise ValueError(f"sampling probability {prob} outside (0, 1)")
    if trials < 1:
        raise ValueError("trials must be positive")
    best = None
    for child in np.random.SeedSequence(seed).spawn(trials):
        in_a = np.random.default_rng(child).random(g.p) < prob
        h = [3] * g.p
        for v in range(g.p):
            if in_a[v]:
                h[v] = 4
            elif any(in_a[u] for u in g.adjacency[v]):
                h[v] = 0
        if best is None or sum(h) < sum(best):
            best = h
    return Labeling(tuple(best), 3)


def ub_tree(g: Graph) -> BoundEntry:
    """7p/4 for trees with p >= 3."""
    rep = struct_report(g)
    if not rep.is_tree or g.p < 3:
        return _na("tree_7p4", "upper", "needs a tree with p >= 3")
    return BoundEntry("tree_7p4", "upper", Fraction(7 * g.p, 4), True)


def ub_diameter(g: Graph) -> BoundEntry:
    """3p - 5*diam/3 + 7/3 for connected graphs with p >= 2."""
    rep = struct_report(g)
    if not rep.is_connected or g.p < 2:
        return _na("diameter", "upper", "needs a connected graph with p >= 2")
    return BoundEntry("diameter", "upper", 3 * g.p - Fraction(5 * rep.diameter, 3) + Fraction(7, 3), True)


def ub_girth_bound(g: Graph) -> BoundEntry:
    """3p + 2 - 5g/3 for connected graphs containing a cycle."""
    rep = struct_report(g)
    if not rep.is_connected:
        return _na("girth", "upper", "needs a connected graph")
    if rep.girth is None:
        return _na("girth", "upper", "acyclic")
    return BoundEntry("girth", "upper", 3 * g.p + 2 - Fraction(5 * rep.girth, 3), True)


# -- lower bounds ----------------------------------------------------------


def lb_degree_domination(g: Graph, gamma: Optional[int] = None) -> BoundEntry:
    """ceil((2p + (Delta-1) * gamma) / Delta), tight when a vertex is universal.

    Without an exact domination number (large graphs) gamma is replaced by
    ceil(p / (Delta+1)), which still gives a valid but weaker bound.
    """
    rep = struct_report(g)
    if not rep.is_connected or g.p < 2:
        return _na("degree_domination", "lower", "needs a connected graph with p >= 2")
    reason = ""
    if gamma is None:
        if g.p <= BRUTEFORCE_LIMIT:
            gamma = domination_number(g)
        else:
            gamma = -(-g.p // (rep.Delta + 1))
            reason = "weakened: gamma replaced by ceil(p/(Delta+1))"
    return BoundEntry("degree_domination", "lower", degree_lower_bound(g.p, rep.Delta, gamma), True, reason)


def lb_chain(g: Graph) -> BoundEntry:
    """gamma_dR + 1, from the strict inequality gamma_dR < gamma_3R (summed per component)."""
    try:
        dr = double_roman_number(g)
    except SizeGuardError as exc:
        return _na("chain", "lower", str(exc))
    n = len(components(g))
    reason = "disconnected: summed over components" if n > 1 else ""
    return BoundEntry("chain", "lower", dr + n, True, reason)


# -- aggregation -----------------------------------------------------------

UPPER_BOUNDS = (
    ub_trivial,
    ub_max_degree,
    ub_max_degree_girth4,
    ub_girth5,
    ub_regular_girth7,
    ub_probabilistic,
    ub_tree,
    ub_diameter,
    ub_girth_bound,
)
LOWER_BOUNDS = (lb_degree_domination, lb_chain)


def constructive_certificates(g: Graph) -> list[Labeling]:
    """Certificates of every applicable constructive upper bound."""
    certs = []
    for fn in (ub_trivial, ub_max_degree, ub_max_degree_girth4, ub_girth5, ub_regular_girth7):
        entry = fn(g)
        if entry.certificate is not None:
            certs.append(entry.certificate)
    return certs


@dataclass(frozen=True)
class BoundReport:
    entries: tuple[BoundEntry, ...] = field(default_factory=tuple)

    @property
    def best_upper(self) -> Optional[int]:
        vals = [e.integer_value for e in self.entries if e.kind == "upper" and e.applicable]
        return min(vals) if vals else None

    @property
    def best_lower(self) -> Optional[int]:
        vals = [e.integer_value for e in self.entries if e.kind == "lower" and e.applicable]
        return max(vals) if vals else None

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "best_lower": self.best_lower,
            "best_upper": self.best_upper,
            "entries": [e.to_dict() for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def best_bounds(g: Graph) -> BoundReport:
    entries = tuple(fn(g) for fn in UPPER_BOUNDS + LOWER_BOUNDS)
    report = BoundReport(entries)
    lo, hi = report.best_lower, report.best_upper
    if lo is not None and hi is not None and lo > hi:  # pragma: no cover
        raise AssertionError(f"best lower bound {lo} exceeds best upper bound {hi}")
    return report
