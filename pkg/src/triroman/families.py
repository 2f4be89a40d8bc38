"""Closed forms and optimal labelings for named families, and the extremal families F and H.

Members of F and H are assembled from ``P4`` blocks. Block ``i`` occupies
vertices ``4i..4i+3`` in path order ``(v1, v2, v3, v4)``; blocks are joined
only through their ``v2`` vertices (index ``4i+1``), called hubs below.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .graph import Graph, double_star, gnp, is_connected, is_tree, random_tree
from .labeling import Labeling

# Optimal labelings for the four cycles that beat the path value.
_EXCEPTIONAL_CYCLES = {
    4: (3, 0, 3, 0),
    5: (3, 0, 2, 2, 0),
    7: (3, 0, 2, 2, 0, 3, 0),
    10: (3, 0, 2, 2, 0, 3, 0, 2, 2, 0),
}


def M_value(p: int) -> int:
    if p < 2:
        raise ValueError("M_p is defined for p >= 2")
    base = 4 * (p // 3)
    return base + (0, 3, 4)[p % 3]


def _path_values(p: int) -> list[int]:
    h = [0, 4, 0] * (p // 3)
    h += ([], [3], [2, 2])[p % 3]
    return h


def gamma_path(p: int) -> tuple[int, Labeling]:
    """Value and optimal labeling of the path ``0-1-...-(p-1)``."""
    value = M_value(p)
    return value, Labeling(tuple(_path_values(p)), 3)


def gamma_cycle(p: int) -> tuple[int, Labeling]:
    """ceil(4p/3) when p is 4, 5, 7, 10 or divisible by 3, otherwise ceil(4p/3) + 1."""
    if p < 3:
        raise ValueError("cycles need p >= 3")
    ceil43 = -(-4 * p // 3)
    if p in _EXCEPTIONAL_CYCLES:
        return ceil43, Labeling(_EXCEPTIONAL_CYCLES[p], 3)
    value = ceil43 if p % 3 == 0 else ceil43 + 1
    # an optimal path labeling stays valid when the closing edge is added
    return value, Labeling(tuple(_path_values(p)), 3)


def gamma_star(p: int) -> tuple[int, Labeling]:
    if p < 2:
        raise ValueError("stars need p >= 2")
    return 4, Labeling((4,) + (0,) * (p - 1), 3)


def gamma_double_star(r: int, s: int) -> tuple[int, Labeling]:
    """Labeling in the vertex numbering of :func:`triroman.graph.double_star`."""
    if r < 1 or s < 1:
        raise ValueError("double stars need r, s >= 1")
    h = [0] * (2 + r + s)
    if min(r, s) >= 2:
        h[0] = h[1] = 4
        return 8, Labeling(tuple(h), 3)
    if s == 1:
        h[0], h[-1] = 4, 3
    else:
        h[1], h[2] = 4, 3
    return 7, Labeling(tuple(h), 3)


def hub(block: int) -> int:
    return 4 * block + 1


def _blocks(n: int) -> list[tuple[int, int]]:
    return [(4 * i + j, 4 * i + j + 1) for i in range(n) for j in range(3)]


def _check_hub_edges(n: int, hub_edges: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    norm = set()
    for i, j in hub_edges:
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise ValueError(f"hub edge ({i}, {j}) must join two distinct blocks in 0..{n - 1}")
        norm.add((min(i, j), max(i, j)))
    if len(norm) != len(hub_edges):
        raise ValueError("repeated hub edge")
    if not is_connected(Graph.from_edges(n, sorted(norm))):
        raise ValueError("hub edges must connect all blocks")
    return sorted(norm)


def gen_family_F(
    k: int,
    attachment: Optional[Sequence[tuple[int, int]]] = None,
    seed: Optional[int] = None,
) -> Graph:
    """Tree of ``k`` P4 blocks joined by ``k-1`` hub edges.

    ``attachment`` lists the block pairs whose hubs are joined and must form
    a tree on the blocks. With ``seed`` instead, the block tree is random.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if attachment is None:
        if k == 1:
            attachment = []
        elif seed is None:
            raise ValueError("give either attachment edges or a seed")
        else:
            attachment = random_tree(k, seed).edges()
    if len(attachment) != k - 1:
        raise ValueError(f"a tree on {k} blocks has {k - 1} edges, got {len(attachment)}")
    pairs = _check_hub_edges(k, attachment)
    g = Graph.from_edges(4 * k, _blocks(k) + [(hub(i), hub(j)) for i, j in pairs])
    assert is_tree(g)
    return g


def gen_family_H(
    l: int,
    extra_edges: Optional[Sequence[tuple[int, int]]] = None,
    seed: Optional[int] = None,
) -> Graph:
    """``l`` P4 blocks whose hubs induce the connected simple graph ``extra_edges``."""
    if l < 1:
        raise ValueError("l must be at least 1")
    if extra_edges is None:
        if l == 1:
            extra_edges = []
        elif seed is None:
            raise ValueError("give either hub edges or a seed")
        else:
            tree = random_tree(l, seed).edges()
            extra_edges = sorted(set(tree) | set(gnp(l, 0.5, seed + 1).edges()))
    pairs = _check_hub_edges(l, extra_edges)
    return Graph.from_edges(4 * l, _blocks(l) + [(hub(i), hub(j)) for i, j in pairs])


def attains_seven_quarters(g: Graph) -> bool:
    """Whether gamma_3R(g) = 7p/4, the characterising property of F (trees) and H."""
    if g.p % 4:
        return False
    if is_tree(g):
        from .treedp import gamma_3R_tree

        value = gamma_3R_tree(g).weight
    else:
        from .exact import gamma_3R_bnb

        value = gamma_3R_bnb(g).weight
    return 4 * value == 7 * g.p
