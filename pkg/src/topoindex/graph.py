"""Immutable simple graphs, degree sequences, distances and tree canonical forms."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graphs or inputs outside an operation's domain."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Build instances with :func:`from_edge_list`; the constructor assumes its
    arguments are already normalised (sorted ``u < v`` pairs, no duplicates).
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def add_edge(self, u: int, v: int) -> "Graph":
        return from_edge_list(self.edges + ((u, v),), self.n)

    def remove_edges(self, drop: Iterable[tuple[int, int]]) -> "Graph":
        gone = {tuple(sorted(e)) for e in drop}
        return from_edge_list([e for e in self.edges if e not in gone], self.n)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return from_edge_list([(perm[u], perm[v]) for u, v in self.edges], self.n)

    def complement(self) -> "Graph":
        return from_edge_list(
            [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.has_edge(u, v)],
            self.n,
        )

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(pairs: Iterable[Sequence[int]], n: int) -> Graph:
    """Build a simple graph, collapsing duplicate pairs.

    Self-loops and endpoints outside ``0..n-1`` raise :class:`GraphError`.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed in a simple graph")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        adj[u].add(v)
        adj[v].add(u)
    edges = tuple(sorted((u, v) for u in range(n) for v in adj[u] if u < v))
    return Graph(n, edges, tuple(frozenset(a) for a in adj))


class DegreeSequence(tuple):
    """Non-increasing tuple of vertex degrees.

    Entries are sorted on construction. Zeros are accepted so that graphs with
    isolated vertices still have a degree sequence; tree operations require
    every entry to be positive.
    """

    def __new__(cls, values: Iterable[int]):
        vals = sorted((int(d) for d in values), reverse=True)
        if vals and vals[-1] < 0:
            raise GraphError(f"degrees must be non-negative, got {vals[-1]}")
        return super().__new__(cls, vals)

    @property
    def n(self) -> int:
        return len(self)

    def is_tree_feasible(self) -> bool:
        n = len(self)
        if n == 1:
            return self[0] == 0
        return n >= 2 and self[-1] >= 1 and sum(self) == 2 * (n - 1)

    def require_tree_feasible(self) -> None:
        if not self.is_tree_feasible():
            raise GraphError(
                f"degree sequence {tuple(self)} is not tree-feasible: "
                f"sum {sum(self)} != 2(n-1) = {2 * (len(self) - 1)} or a degree is < 1"
            )

    def __repr__(self) -> str:
        return f"DegreeSequence({tuple(self)})"


@dataclass(frozen=True)
class EdgeSplit:
    """Vertex counts strictly closer to each endpoint of ``edge``."""

    edge: tuple[int, int]
    n_a: int
    n_b: int


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(g.degrees)


def edge_degree_census(g: Graph) -> Counter:
    """Count edges by their (smaller, larger) endpoint-degree pair."""
    deg = g.degrees
    return Counter(tuple(sorted((deg[u], deg[v]))) for u, v in g.edges)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return min(bfs_distances(g, 0)) >= 0


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def cyclomatic_number(g: Graph) -> int:
    if not is_connected(g):
        raise GraphError("cyclomatic number is defined for connected graphs only")
    return g.m - g.n + 1


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


@lru_cache(maxsize=512)
def _distance_rows(g: Graph) -> tuple[tuple[int, ...], ...]:
    rows = []
    for s in range(g.n):
        row = bfs_distances(g, s)
        if min(row) < 0:
            t = row.index(-1)
            raise GraphError(f"graph is disconnected: vertex {t} is unreachable from {s}")
        rows.append(tuple(row))
    return tuple(rows)


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Integer distance matrix of a connected graph (BFS from every vertex)."""
    return np.array(_distance_rows(g), dtype=np.int64).reshape(g.n, g.n)


def edge_splits(g: Graph) -> list[EdgeSplit]:
    """Closer-side vertex counts for every edge.

    Vertices equidistant from both endpoints are counted on neither side, so on
    trees the split is the component split of ``G - e``.
    """
    d = all_pairs_distances(g)
    out = []
    for u, v in g.edges:
        du, dv = d[u], d[v]
        out.append(EdgeSplit((u, v), int(np.sum(du < dv)), int(np.sum(dv < du))))
    return out


def tree_centers(t: Graph) -> list[int]:
    """One or two central vertices, found by repeatedly stripping leaves."""
    if t.n <= 2:
        return list(range(t.n))
    deg = list(t.degrees)
    layer = [v for v in range(t.n) if deg[v] <= 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for w in t.adjacency[leaf]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(t: Graph, root: int) -> str:
    parent = {root: -1}
    order = [root]
    for u in order:
        for w in t.adjacency[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    codes: dict[int, list[str]] = {v: [] for v in order}
    label = {}
    for u in reversed(order):
        label[u] = "(" + "".join(sorted(codes[u])) + ")"
        if parent[u] >= 0:
            codes[parent[u]].append(label[u])
    return label[root]


def canonical_tree_code(t: Graph, root: int | None = None) -> str:
    """AHU parenthesis code; equal for two trees exactly when they are isomorphic.

    With ``root`` given the code is that of the rooted tree instead.
    """
    if not is_tree(t):
        raise GraphError("canonical_tree_code requires a tree")
    if root is not None:
        return _rooted_code(t, root)
    return min(_rooted_code(t, c) for c in tree_centers(t))


# Text formats -----------------------------------------------------------------


def parse_edge_list(text: str) -> tuple[Graph, list[str]]:
    """Parse ``u v`` lines (``#`` comments, optional ``n=<count>`` header).

    Returns the graph and the original label of every dense vertex id. Labels
    that are all integers in ``0..n-1`` keep their ids; anything else is
    remapped in sorted order.
    """
    n_header = None
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.replace(" ", "").startswith("n="):
            n_header = int(line.replace(" ", "")[2:])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        pairs.append((parts[0], parts[1]))
    tokens = {x for p in pairs for x in p}
    is_int = all(t.lstrip("-").isdigit() for t in tokens)
    if is_int:
        ints = sorted({int(t) for t in tokens})
        n = n_header if n_header is not None else (ints[-1] + 1 if ints else 0)
        if not ints or (ints[0] >= 0 and ints[-1] < n):
            ids = {t: int(t) for t in tokens}
            return from_edge_list([(ids[a], ids[b]) for a, b in pairs], n), [str(i) for i in range(n)]
        names = [str(x) for x in ints]
        ids = {t: ints.index(int(t)) for t in tokens}
    else:
        names = sorted(tokens)
        ids = {name: i for i, name in enumerate(names)}
    n = max(len(names), n_header or 0)
    labels = names + [f"_{i}" for i in range(len(names), n)]
    return from_edge_list([(ids[a], ids[b]) for a, b in pairs], n), labels


def read_edge_list(path) -> tuple[Graph, list[str]]:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"n={g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path, comment: str | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(format_edge_list(g, comment))


def parse_degree_sequence(text: str) -> DegreeSequence:
    """One integer per line or comma separated; ``#`` starts a comment."""
    vals = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0]
        vals.extend(int(tok) for tok in line.replace(",", " ").split())
    return DegreeSequence(vals)


def iter_vertex_pairs(n: int) -> Iterator[tuple[int, int]]:
    for u in range(n):
        for v in range(u + 1, n):
            yield u, v
