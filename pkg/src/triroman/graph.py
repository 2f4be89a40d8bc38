"""Simple undirected graphs on dense vertex indices, plus generators and I/O.

Vertices are ``0..p-1``. A :class:`Graph` is immutable once built; the
adjacency is a tuple of frozensets.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional


class GraphFormatError(ValueError):
    """Raised when edge-list text cannot be parsed."""


@dataclass(frozen=True)
class Graph:
    p: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.adjacency) != self.p:
            raise ValueError("adjacency length does not match p")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.p or v not in self.adjacency[u]:
                    raise ValueError(f"asymmetric or out-of-range edge {v}-{u}")

    @classmethod
    def from_edges(cls, p: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(p)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < p and 0 <= v < p):
                raise ValueError(f"edge {u}-{v} out of range for p={p}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(p, tuple(frozenset(s) for s in adj))

    @property
    def q(self) -> int:
        return sum(len(s) for s in self.adjacency) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        return sorted((u, v) for u in range(self.p) for v in self.adjacency[u] if u < v)

    @property
    def min_degree(self) -> int:
        return min(len(s) for s in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(len(s) for s in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled to ``0..len-1``; also returns the old labels."""
        old = sorted(vertices)
        index = {v: i for i, v in enumerate(old)}
        edges = [
            (index[u], index[v])
            for u in old
            for v in self.adjacency[u]
            if v in index and u < v
        ]
        return Graph.from_edges(len(old), edges), old

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph.from_edges(self.p, self.edges() + [(u, v)])


# -- structure -------------------------------------------------------------


@dataclass(frozen=True)
class StructReport:
    """Structural summary. ``diameter`` is None when disconnected, ``girth`` None for forests."""

    delta: int
    Delta: int
    diameter: Optional[int]
    girth: Optional[int]
    is_tree: bool
    is_connected: bool
    is_regular: Optional[int]


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.p
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.p
    comps = []
    for s in range(g.p):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.q == g.p - 1 and is_connected(g)


def diameter(g: Graph) -> Optional[int]:
    best = 0
    for s in range(g.p):
        dist = bfs_distances(g, s)
        if min(dist) < 0:
            return None
        best = max(best, max(dist))
    return best


def girth(g: Graph) -> Optional[int]:
    # BFS from every vertex; a non-tree edge closing at depth d1, d2 gives a
    # closed walk of length d1+d2+1 which bounds a cycle through the root.
    best = None
    for s in range(g.p):
        dist = [-1] * g.p
        parent = [-1] * g.p
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best


def struct_report(g: Graph) -> StructReport:
    degrees = {len(s) for s in g.adjacency}
    connected = is_connected(g)
    return StructReport(
        delta=min(degrees),
        Delta=max(degrees),
        diameter=diameter(g),
        girth=girth(g),
        is_tree=connected and g.q == g.p - 1,
        is_connected=connected,
        is_regular=degrees.pop() if len(degrees) == 1 else None,
    )


# -- generators ------------------------------------------------------------


def path(p: int) -> Graph:
    """Path ``0-1-...-(p-1)``."""
    if p < 1:
        raise ValueError("path needs p >= 1")
    return Graph.from_edges(p, [(i, i + 1) for i in range(p - 1)])


def cycle(p: int) -> Graph:
    """Cycle ``0-1-...-(p-1)-0``."""
    if p < 3:
        raise ValueError("cycle needs p >= 3")
    return Graph.from_edges(p, [(i, (i + 1) % p) for i in range(p)])


def star(p: int) -> Graph:
    """K_{1,p-1} with center 0."""
    if p < 1:
        raise ValueError("star needs p >= 1")
    return Graph.from_edges(p, [(0, i) for i in range(1, p)])


def complete(p: int) -> Graph:
    return Graph.from_edges(p, [(u, v) for u in range(p) for v in range(u + 1, p)])


def double_star(r: int, s: int) -> Graph:
    """DS_{r,s}: stems 0 and 1, then the r leaves of 0, then the s leaves of 1."""
    if r < 1 or s < 1:
        raise ValueError("double star needs r, s >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(r)]
    edges += [(1, 2 + r + i) for i in range(s)]
    return Graph.from_edges(2 + r + s, edges)


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: side A is ``0..m-1``, side B is ``m..m+n-1``."""
    if m < 1 or n < 1:
        raise ValueError("complete bipartite needs m, n >= 1")
    return Graph.from_edges(m + n, [(a, m + b) for a in range(m) for b in range(n)])


def spider(legs: list[int]) -> Graph:
    """Center 0 with one path per entry of ``legs``; leg vertices are numbered outward, leg by leg."""
    if any(length < 1 for length in legs):
        raise ValueError("leg lengths must be positive")
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def gnp(p: int, prob: float, seed: int) -> Graph:
    """Erdos-Renyi G(p, prob), deterministic in ``seed``."""
    if not 0.0 <= prob <= 1.0:
        raise ValueError("prob must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(p) for v in range(u + 1, p) if rng.random() < prob]
    return Graph.from_edges(p, edges)


def random_tree(p: int, seed: int) -> Graph:
    """Uniform labelled tree on ``p`` vertices, decoded from a random Pruefer sequence."""
    if p < 1:
        raise ValueError("tree needs p >= 1")
    if p <= 2:
        return path(p)
    rng = random.Random(seed)
    seq = [rng.randrange(p) for _ in range(p - 2)]
    degree = [1] * p
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(p) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(p) if degree[x] == 1]
    edges.append((u, w))
    return Graph.from_edges(p, edges)


def random_connected(p: int, prob: float, seed: int) -> Graph:
    """A random spanning tree plus G(p, prob) edges; always connected."""
    tree = random_tree(p, seed)
    extra = gnp(p, prob, seed + 1)
    return Graph.from_edges(p, tree.edges() + extra.edges())


# -- text I/O --------------------------------------------------------------


def from_edge_list(text: str) -> Graph:
    """Parse the line-oriented edge-list format.

    Anything after ``#`` is a comment and blank lines are ignored. The first
    remaining line may be ``p <n>``; every other line is ``u v``.
    """
    declared = None
    edges = []
    first = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if first and tokens[0] == "p":
            first = False
            if len(tokens) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'p <n>'")
            declared = _parse_int(tokens[1], lineno)
            if declared < 1:
                raise GraphFormatError(f"line {lineno}: vertex count must be positive")
            continue
        first = False
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = (_parse_int(t, lineno) for t in tokens)
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex index")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    top = max((max(e) for e in edges), default=-1) + 1
    if declared is None:
        if top == 0:
            raise GraphFormatError("no vertices: give a 'p <n>' line or at least one edge")
        n = top
    else:
        if top > declared:
            raise GraphFormatError(f"edge endpoint {top - 1} exceeds declared p={declared}")
        n = declared
    return Graph.from_edges(n, edges)


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: not an integer: {token!r}") from None


def to_edge_list(g: Graph) -> str:
    lines = [f"p {g.p}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
