"""Deterministic constructions of the graph families used throughout the package."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .graph import DegreeSequence, Graph, GraphError, from_edge_list


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return from_edge_list([(i, i + 1) for i in range(n - 1)], n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return from_edge_list([(i, (i + 1) % n) for i in range(n)], n)


def star(n: int) -> Graph:
    """Star on ``n`` vertices (centre 0, ``n - 1`` leaves)."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return from_edge_list([(0, i) for i in range(1, n)], n)


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return from_edge_list([(u, v) for u in range(n) for v in range(u + 1, n)], n)


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise GraphError(f"parts must be a non-empty list of positive sizes, got {list(parts)}")
    owner = [i for i, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return from_edge_list(
        [(u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v]], n
    )


def balanced_parts(n: int, k: int) -> list[int]:
    """Part sizes of the balanced complete ``k``-partite graph on ``n`` vertices."""
    if not 1 <= k <= n:
        raise GraphError(f"need 1 <= k <= n, got k={k}, n={n}")
    q, r = divmod(n, k)
    return [q + 1] * r + [q] * (k - r)


def double_star(n: int) -> Graph:
    """Two adjacent centres (0 and 1), each carrying ``n`` leaves."""
    if n < 1:
        raise GraphError("double star needs n >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(n)]
    edges += [(1, 2 + n + i) for i in range(n)]
    return from_edge_list(edges, 2 * n + 2)


def star_like(*legs: int) -> Graph:
    """Paths of the given lengths glued at a common centre (vertex 0)."""
    if len(legs) == 1 and not isinstance(legs[0], int):
        legs = tuple(legs[0])
    if not legs:
        raise GraphError("star_like needs at least one leg")
    if any(b < 1 for b in legs):
        raise GraphError(f"leg lengths must be >= 1, got {legs}")
    edges = []
    nxt = 1
    for b in legs:
        prev = 0
        for _ in range(b):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edge_list(edges, nxt)


class GreedyTree(NamedTuple):
    graph: Graph
    layers: tuple[int, ...]


def greedy_tree(degrees: Sequence[int]) -> GreedyTree:
    """Breadth-first greedy tree: larger degrees go to shallower, lefter vertices.

    Vertex ``i`` of the result receives the ``i``-th largest degree; ``layers``
    holds the vertex count of every BFS level.
    """
    d = DegreeSequence(degrees)
    d.require_tree_feasible()
    n = len(d)
    edges = []
    depth = [0] * n
    nxt = 1
    for v in range(n):
        children = d[v] if v == 0 else d[v] - 1
        for _ in range(children):
            edges.append((v, nxt))
            depth[nxt] = depth[v] + 1
            nxt += 1
    layers = [0] * (max(depth) + 1)
    for h in depth:
        layers[h] += 1
    return GreedyTree(from_edge_list(edges, n), tuple(layers))


class Caterpillar(NamedTuple):
    graph: Graph
    spine: tuple[int, ...]


def caterpillar(d1: int, k: int, n: int | None = None) -> Caterpillar:
    """Caterpillar with ``k`` inner spine vertices of degree ``d1 + 1`` and two
    end spine vertices of degree ``d1``.

    Every spine vertex carries ``d1 - 1`` pendant vertices, so the order is
    ``(k + 2) * d1``. Passing ``n`` asserts that order.
    """
    if d1 < 2:
        raise GraphError(f"caterpillar needs d1 >= 2, got {d1}")
    if k < 1:
        raise GraphError(f"caterpillar needs k >= 1 inner spine vertices, got {k}")
    order = (k + 2) * d1
    if n is not None and n != order:
        raise GraphError(
            f"caterpillar(d1={d1}, k={k}) has (k + 2) * d1 = {order} vertices, not n = {n}"
        )
    spine = tuple(range(k + 2))
    edges = [(i, i + 1) for i in range(k + 1)]
    nxt = k + 2
    for s in spine:
        for _ in range(d1 - 1):
            edges.append((s, nxt))
            nxt += 1
    return Caterpillar(from_edge_list(edges, order), spine)


@dataclass(frozen=True)
class ThornSpec:
    base: Graph
    p: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(int(x) for x in self.p))
        if len(self.p) != self.base.n:
            raise GraphError(f"need one pendant count per vertex: {len(self.p)} != {self.base.n}")
        if any(x < 0 for x in self.p):
            raise GraphError("pendant counts must be non-negative")


def thorny(spec: ThornSpec) -> Graph:
    """Attach ``p[i]`` new pendant vertices to every vertex ``i`` of the base graph."""
    g = spec.base
    edges = list(g.edges)
    nxt = g.n
    for v, count in enumerate(spec.p):
        for _ in range(count):
            edges.append((v, nxt))
            nxt += 1
    return from_edge_list(edges, nxt)


def subdivision(g: Graph) -> Graph:
    """Insert a new vertex ``n + i`` on the ``i``-th edge."""
    edges = []
    for i, (u, v) in enumerate(g.edges):
        w = g.n + i
        edges += [(u, w), (w, v)]
    return from_edge_list(edges, g.n + g.m)


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` (in ``g.edges`` order)."""
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = set()
    for inc in incident:
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                pairs.add((inc[a], inc[b]))
    return from_edge_list(sorted(pairs), g.m)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(outer + spokes + inner, 10)


def bfs_layers(g: Graph, root: int = 0) -> tuple[int, ...]:
    depth = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(g.adjacency[u]):
            if w not in depth:
                depth[w] = depth[u] + 1
                queue.append(w)
    layers = [0] * (max(depth.values()) + 1)
    for h in depth.values():
        layers[h] += 1
    return tuple(layers)
