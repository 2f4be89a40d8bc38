"""Exact 3-Cover to triple Roman domination.

For an instance with ground set ``0..3q-1`` and triples ``C_0..C_{t-1}`` the
gadget has, per element ``i``, an edge ``x_i y_i``; per triple ``j``, a star
``K_{1,4}`` centred at ``w_j`` whose leaves are ``c_j`` and three pendant
vertices; and an edge ``c_j x_i`` for every ``i`` in ``C_j``. The chordal
variant also makes ``{c_j}`` a clique. The instance has an exact cover iff
the gadget has a 3RDF of weight at most ``4t + 11q``.

Vertex numbering: ``x_i = i``, ``y_i = 3q + i``, and triple ``j`` owns the
five vertices starting at ``6q + 5j`` in the order ``c_j, w_j, leaf, leaf, leaf``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .graph import Graph
from .labeling import Labeling, verify_krdf, InvalidLabelingError

X3C_LIMIT = 20


class Variant(str, enum.Enum):
    BIPARTITE = "bipartite"
    CHORDAL = "chordal"


class X3CFormatError(ValueError):
    pass


@dataclass(frozen=True)
class X3CInstance:
    q: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.q < 1:
            raise X3CFormatError("q must be positive")
        norm = []
        for j, tri in enumerate(self.triples):
            tri = tuple(sorted(int(x) for x in tri))
            if len(tri) != 3 or len(set(tri)) != 3:
                raise X3CFormatError(f"triple {j} must have 3 distinct elements: {tri}")
            if tri[0] < 0 or tri[2] >= 3 * self.q:
                raise X3CFormatError(f"triple {j} has an element outside 0..{3 * self.q - 1}")
            norm.append(tri)
        object.__setattr__(self, "triples", tuple(norm))

    @property
    def t(self) -> int:
        return len(self.triples)

    @classmethod
    def from_text(cls, text: str) -> "X3CInstance":
        rows = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
        try:
            rows = [[int(x) for x in r] for r in rows]
        except ValueError as exc:
            raise X3CFormatError(str(exc)) from None
        if not rows or len(rows[0]) != 2:
            raise X3CFormatError("first line must be 'q t'")
        q, t = rows[0]
        if len(rows) - 1 != t:
            raise X3CFormatError(f"header announces {t} triples, found {len(rows) - 1}")
        if any(len(r) != 3 for r in rows[1:]):
            raise X3CFormatError("every triple line needs exactly 3 integers")
        return cls(q, tuple(tuple(r) for r in rows[1:]))

    def to_text(self) -> str:
        lines = [f"{self.q} {self.t}"] + [" ".join(map(str, tri)) for tri in self.triples]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GadgetMap:
    q: int
    t: int
    variant: Variant

    @property
    def threshold(self) -> int:
        return 4 * self.t + 11 * self.q

    @property
    def p(self) -> int:
        return 6 * self.q + 5 * self.t

    def x(self, i: int) -> int:
        return i

    def y(self, i: int) -> int:
        return 3 * self.q + i

    def c(self, j: int) -> int:
        return 6 * self.q + 5 * j

    def w(self, j: int) -> int:
        return 6 * self.q + 5 * j + 1

    def leaves(self, j: int) -> list[int]:
        base = 6 * self.q + 5 * j
        return [base + 2, base + 3, base + 4]

    def roles(self) -> list[str]:
        out = [f"x{i}" for i in range(3 * self.q)] + [f"y{i}" for i in range(3 * self.q)]
        for j in range(self.t):
            out += [f"c{j}", f"w{j}", f"leaf{j}.0", f"leaf{j}.1", f"leaf{j}.2"]
        return out

    def to_json(self) -> str:
        return json.dumps(
            {"q": self.q, "t": self.t, "variant": self.variant.value, "threshold": self.threshold, "roles": self.roles()},
            indent=2,
        )


def build_gadget(inst: X3CInstance, variant: Variant | str = Variant.BIPARTITE) -> tuple[Graph, GadgetMap]:
    variant = Variant(variant)
    gm = GadgetMap(inst.q, inst.t, variant)
    edges = [(gm.x(i), gm.y(i)) for i in range(3 * inst.q)]
    for j, tri in enumerate(inst.triples):
        edges.append((gm.w(j), gm.c(j)))
        edges += [(gm.w(j), leaf) for leaf in gm.leaves(j)]
        edges += [(gm.c(j), gm.x(i)) for i in tri]
    if variant is Variant.CHORDAL:
        edges += [(gm.c(a), gm.c(b)) for a, b in combinations(range(inst.t), 2)]
    return Graph.from_edges(gm.p, edges), gm


def is_exact_cover(inst: X3CInstance, cover: Sequence[int]) -> bool:
    seen = [0] * (3 * inst.q)
    for j in cover:
        if not 0 <= j < inst.t:
            return False
        for x in inst.triples[j]:
            seen[x] += 1
    return all(n == 1 for n in seen)


def cover_to_labeling(inst: X3CInstance, cover: Sequence[int], gadget: GadgetMap) -> Labeling:
    """Stars 4/0, every y 3, every x 0, and c_j = 2 exactly for chosen triples."""
    if not is_exact_cover(inst, cover):
        raise ValueError(f"{sorted(cover)} is not an exact cover")
    h = [0] * gadget.p
    for i in range(3 * inst.q):
        h[gadget.y(i)] = 3
    for j in range(inst.t):
        h[gadget.w(j)] = 4
    for j in cover:
        h[gadget.c(j)] = 2
    return Labeling(tuple(h), 3)


def canonicalize(g: Graph, gadget: GadgetMap, labeling: Labeling) -> Labeling:
    """Rewrite a valid gadget labeling into canonical shape without adding weight.

    Every star becomes 4 on the centre and 0 on the pendants (it can never
    cost less than 4, and a 4 satisfies ``c_j`` outright). Each ``c_j`` label
    is then clamped to ``{0, 2}``: ``c_j`` needs nothing from the x side and a 2
    already covers any ``x_i`` whose partner ``y_i`` is 3. Finally each pair
    becomes ``x_i = 0`` with ``y_i = 3`` if some neighbouring ``c_j`` is 2, else
    ``y_i = 4``; a pair always cost at least 3, and at least 4 unless it was
    already ``(0, 3)`` with such a ``c_j``.
    """
    if verify_krdf(g, labeling, 3):
        raise InvalidLabelingError("canonicalize needs a valid 3RDF")
    h = list(labeling.values)
    nq = 3 * gadget.q
    for j in range(gadget.t):
        h[gadget.w(j)] = 4
        for leaf in gadget.leaves(j):
            h[leaf] = 0
    for j in range(gadget.t):
        c = gadget.c(j)
        # a c_j label of 3 or 4 only adds surplus beyond what any x_i still needs
        h[c] = 2 if h[c] >= 2 else 0
    for i in range(nq):
        x, y = gadget.x(i), gadget.y(i)
        covered = any(h[c] == 2 for c in g.adjacency[x] if c != y)
        h[x] = 0
        h[y] = 3 if covered else 4
    out = Labeling(tuple(h), 3)
    assert not verify_krdf(g, out, 3)
    return out


def labeling_to_cover(inst: X3CInstance, gadget: GadgetMap, labeling: Labeling) -> list[int]:
    """Extract an exact cover from a valid labeling of weight at most ``4t + 11q``."""
    g, _ = build_gadget(inst, gadget.variant)
    if labeling.weight > gadget.threshold:
        raise ValueError(f"weight {labeling.weight} exceeds threshold {gadget.threshold}")
    canon = canonicalize(g, gadget, labeling)
    if canon.weight > labeling.weight:
        raise AssertionError("canonical form is heavier than the input")
    cover = [j for j in range(inst.t) if canon[gadget.c(j)] == 2]
    if not is_exact_cover(inst, cover):
        raise AssertionError("canonical labeling under threshold does not encode an exact cover")
    return cover


def x3c_bruteforce(inst: X3CInstance) -> Optional[list[int]]:
    """First exact cover in lexicographic order of index tuples, or None."""
    if inst.t > X3C_LIMIT:
        raise ValueError(f"x3c_bruteforce handles at most {X3C_LIMIT} triples")
    for combo in combinations(range(inst.t), inst.q):
        if is_exact_cover(inst, combo):
            return list(combo)
    return None
