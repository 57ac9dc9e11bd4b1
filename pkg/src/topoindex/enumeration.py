"""Exhaustive enumeration of small trees and graphs, tree classes and brute-force oracles."""

from __future__ import annotations

import enum
import heapq
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, NamedTuple, Sequence

from .degree_indices import hf, vertex_function
from .graph import DegreeSequence, Graph, GraphError, canonical_tree_code, from_edge_list, is_connected, is_tree

ALL_TREES_MAX_N = 12
UNLABELED_MAX_N = 14
CHROMATIC_MAX_N = 12
SUM_SQUARES_MAX_N = 7
ATLAS_MAX_N = 7


# Tree generation --------------------------------------------------------------


@lru_cache(maxsize=None)
def _trees_by_growth(n: int, max_degree: int) -> tuple[Graph, ...]:
    """All unlabeled trees on ``n`` vertices with maximum degree <= ``max_degree``.

    Grown one leaf at a time from K1 and deduplicated by canonical code.
    Deleting a leaf never raises the maximum degree, so pruning is safe.
    """
    if n == 1:
        return (from_edge_list([], 1),)
    out: dict[str, Graph] = {}
    for t in _trees_by_growth(n - 1, max_degree):
        seen_roots = set()
        for v in range(t.n):
            if t.degree(v) >= max_degree:
                continue
            # vertices with the same rooted code give isomorphic extensions
            rc = canonical_tree_code(t, root=v)
            if rc in seen_roots:
                continue
            seen_roots.add(rc)
            g = from_edge_list(t.edges + ((v, t.n),), n)
            code = canonical_tree_code(g)
            if code not in out:
                out[code] = g
    return tuple(out[c] for c in sorted(out))


def all_trees(n: int, limit: int = ALL_TREES_MAX_N, max_degree: int | None = None) -> Iterator[Graph]:
    """Every unlabeled tree on ``n`` vertices, one representative per class.

    ``limit`` is a budget guard; ``max_degree`` restricts to trees with
    maximum degree at most that value (4 gives chemical trees).
    """
    if n < 1:
        raise GraphError(f"need n >= 1, got {n}")
    if n > limit:
        raise GraphError(f"all_trees(n={n}) exceeds the enumeration budget n <= {limit}")
    cap = n - 1 if max_degree is None else max_degree
    if n > 1 and cap < 1:
        return iter(())
    return iter(_trees_by_growth(n, max(cap, 1) if n > 1 else 0))


def chemical_trees(n: int, limit: int = UNLABELED_MAX_N) -> Iterator[Graph]:
    return all_trees(n, limit=limit, max_degree=4)


def prufer_decode(code: Sequence[int], n: int) -> Graph:
    """Tree on ``0..n-1`` whose Prufer sequence is ``code`` (length ``n - 2``)."""
    if n < 2 or len(code) != n - 2:
        raise GraphError(f"a Prufer code for n={n} has length {n - 2}, got {len(code)}")
    degree = [1] * n
    for x in code:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return from_edge_list(edges, n)


def prufer_encode(t: Graph) -> tuple[int, ...]:
    if not is_tree(t) or t.n < 2:
        raise GraphError("Prufer encoding needs a tree with at least 2 vertices")
    adj = [set(a) for a in t.adjacency]
    leaves = [v for v in range(t.n) if len(adj[v]) == 1]
    heapq.heapify(leaves)
    code = []
    for _ in range(t.n - 2):
        leaf = heapq.heappop(leaves)
        (parent,) = adj[leaf]
        code.append(parent)
        adj[parent].discard(leaf)
        adj[leaf].clear()
        if len(adj[parent]) == 1:
            heapq.heappush(leaves, parent)
    return tuple(code)


def _distinct_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Lexicographic permutations of a multiset without repeats."""
    a = sorted(items)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def labeled_tree_count(degrees: Sequence[int]) -> int:
    """``(n - 2)! / prod (d_i - 1)!`` labeled trees realise the sequence."""
    d = DegreeSequence(degrees)
    d.require_tree_feasible()
    if len(d) == 1:
        return 1
    out = math.factorial(len(d) - 2)
    for x in d:
        out //= math.factorial(x - 1)
    return out


def trees_with_degree_sequence(degrees: Sequence[int], labeled: bool = False) -> Iterator[Graph]:
    """Trees whose degree sequence is ``degrees``.

    Labeled mode walks the Prufer strings in which vertex ``i`` (carrying the
    ``i``-th largest degree) appears ``d_i - 1`` times. Unlabeled mode yields
    one tree per isomorphism class.
    """
    d = DegreeSequence(degrees)
    d.require_tree_feasible()
    n = len(d)
    if n == 1:
        yield from_edge_list([], 1)
        return
    if labeled:
        multiset = [v for v in range(n) for _ in range(d[v] - 1)]
        for code in _distinct_permutations(multiset):
            yield prufer_decode(code, n)
        return
    if n > UNLABELED_MAX_N:
        raise GraphError(f"unlabeled enumeration is limited to n <= {UNLABELED_MAX_N} (got {n})")
    for t in _trees_by_growth(n, max(d[0], 1)):
        if DegreeSequence(t.degrees) == d:
            yield t


def tree_degree_sequences(n: int, max_degree: int | None = None) -> Iterator[DegreeSequence]:
    """Tree-feasible degree sequences of length ``n`` in reverse lexicographic order."""
    if n == 1:
        yield DegreeSequence([0])
        return
    cap = n - 1 if max_degree is None else max_degree

    def rec(prefix: list[int], left: int, slots: int, hi: int):
        # each remaining slot needs at least 1
        if slots == 0:
            if left == 0:
                yield DegreeSequence(prefix)
            return
        for x in range(min(hi, left - (slots - 1)), 0, -1):
            if x * slots < left:
                break
            yield from rec(prefix + [x], left - x, slots - 1, x)

    yield from rec([], 2 * (n - 1), n, cap)


# Tree classes -----------------------------------------------------------------


class TreeProfile(NamedTuple):
    pendants: int
    segments: int
    branching: int
    perfect_matching: bool
    max_degree: int


def _has_perfect_matching(t: Graph) -> bool:
    """Greedy leaf matching in post-order, which is exact on trees."""
    if t.n % 2:
        return False
    parent = {0: -1}
    order = [0]
    for u in order:
        for w in t.adjacency[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    matched = [False] * t.n
    for v in reversed(order):
        if matched[v]:
            continue
        p = parent[v]
        if p < 0 or matched[p]:
            return False
        matched[v] = matched[p] = True
    return True


def classify(t: Graph) -> TreeProfile:
    """Pendant, segment and branching counts of a tree, plus matching and max degree.

    A segment is a maximal path whose inner vertices all have degree 2, so the
    segment count equals the number of non-degree-2 vertices minus one. The
    one-vertex tree is counted as a single segment.
    """
    if not is_tree(t):
        raise GraphError("classify expects a tree")
    deg = t.degrees
    pendants = sum(1 for d in deg if d == 1)
    branching = sum(1 for d in deg if d >= 3)
    segments = 1 if t.n == 1 else sum(1 for d in deg if d != 2) - 1
    return TreeProfile(pendants, segments, branching, _has_perfect_matching(t), max(deg, default=0))


class TreeClassKind(str, enum.Enum):
    PT = "PT"  # p pendant vertices
    ST = "ST"  # s segments
    BT = "BT"  # b branching vertices
    DT = "DT"  # same membership as BT, kept as a separate name
    MT = "MT"  # perfect matching, n = 2m

    @classmethod
    def parse(cls, name: "str | TreeClassKind") -> "TreeClassKind":
        if isinstance(name, cls):
            return name
        try:
            return cls(name.upper())
        except ValueError:
            raise KeyError(f"unknown tree class {name!r}") from None


@dataclass(frozen=True)
class TreeClass:
    """A tree class such as ``PT_{n,p}``; ``param`` is unused for MT."""

    kind: TreeClassKind
    param: int = 0
    chemical: bool = False

    def __post_init__(self):
        object.__setattr__(self, "kind", TreeClassKind.parse(self.kind))

    def contains(self, t: Graph, profile: TreeProfile | None = None) -> bool:
        pr = profile or classify(t)
        if self.chemical and pr.max_degree > 4:
            return False
        k = self.kind
        if k is TreeClassKind.PT:
            return pr.pendants == self.param
        if k is TreeClassKind.ST:
            return pr.segments == self.param
        if k in (TreeClassKind.BT, TreeClassKind.DT):
            return pr.branching == self.param
        return pr.perfect_matching

    def label(self, n: int) -> str:
        if self.kind is TreeClassKind.MT:
            return f"MT_{n}"
        return f"{self.kind.value}_{{{n},{self.param}}}"


def parse_tree_class(text: str) -> TreeClass:
    """``PT:3``, ``BT:2``, ``MT`` and so on; a ``chem`` suffix (``BT:2:chem``) adds the Delta <= 4 filter."""
    parts = text.split(":")
    kind = TreeClassKind.parse(parts[0])
    param = int(parts[1]) if len(parts) > 1 and parts[1] and parts[1] != "chem" else 0
    chemical = "chem" in parts[1:]
    return TreeClass(kind, param, chemical)


# Majorization -----------------------------------------------------------------


def _prefix(d: Sequence[int]) -> list[int]:
    return list(itertools.accumulate(d))


def majorizes(d: Sequence[int], d2: Sequence[int]) -> bool:
    """True when ``d2`` majorizes ``d`` (every prefix of ``d`` <= that of ``d2``, equal sums)."""
    a, b = DegreeSequence(d), DegreeSequence(d2)
    if len(a) != len(b):
        raise GraphError(f"sequences have different lengths {len(a)} and {len(b)}")
    if sum(a) != sum(b):
        return False
    return all(x <= y for x, y in zip(_prefix(a), _prefix(b)))


def majorization_chain(d: Sequence[int], d2: Sequence[int]) -> list[DegreeSequence]:
    """Sequences from ``d`` to ``d2``, consecutive ones differing by +1 at ``j`` and -1 at ``k > j``.

    Every step is majorized by the next one and the last entry equals ``d2``.
    """
    cur = list(DegreeSequence(d))
    target = list(DegreeSequence(d2))
    if len(cur) != len(target):
        raise GraphError(f"sequences have different lengths {len(cur)} and {len(target)}")
    if sum(cur) != sum(target):
        raise GraphError(f"sums differ: {sum(cur)} != {sum(target)}")
    pa, pb = _prefix(cur), _prefix(target)
    for i, (x, y) in enumerate(zip(pa, pb)):
        if x > y:
            raise GraphError(f"not majorized: prefix {i} sums to {x} > {y}")
    chain = [DegreeSequence(cur)]
    while cur != target:
        j = next(i for i in range(len(cur)) if cur[i] != target[i])
        pa, pb = _prefix(cur), _prefix(target)
        k = next(i for i in range(j + 1, len(cur)) if pa[i] == pb[i])
        cur[j] += 1
        cur[k] -= 1
        chain.append(DegreeSequence(cur))
    return chain


def prefix_gap(d: Sequence[int], d2: Sequence[int]) -> int:
    """``sum_i (P2_i - P_i)``; every chain step lowers it by at least one."""
    return sum(y - x for x, y in zip(_prefix(DegreeSequence(d)), _prefix(DegreeSequence(d2))))


# Extremal search --------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalResult:
    value: float
    witnesses: tuple[DegreeSequence, ...]
    trees: tuple[Graph, ...]
    class_size: int


def objective_function(spec: "str | Callable[[Graph], float]") -> Callable[[Graph], float]:
    """``hf:<vertex function>`` or a callable taking a tree."""
    if callable(spec):
        return spec
    s = spec.strip()
    if s.lower().startswith("hf:"):
        f = vertex_function(s[3:])
        return lambda t: hf(t.degrees, f)
    raise KeyError(f"unknown objective {spec!r} (expected hf:<function>)")


def class_members(cls: TreeClass, n: int, limit: int = UNLABELED_MAX_N) -> list[Graph]:
    if cls.kind is TreeClassKind.MT and n % 2:
        raise GraphError(f"MT classes have an even number of vertices, got n={n}")
    max_degree = 4 if cls.chemical else None
    return [t for t in all_trees(n, limit=limit, max_degree=max_degree) if cls.contains(t)]


def extremal_search(
    cls: TreeClass,
    n: int,
    objective: "str | Callable[[Graph], float]",
    direction: str = "min",
    limit: int = UNLABELED_MAX_N,
) -> ExtremalResult:
    """Exact optimum of ``objective`` over every unlabeled tree of the class.

    Ties (within 1e-9 relative) are all kept as witnesses.
    """
    if direction not in ("min", "max"):
        raise GraphError(f"direction must be 'min' or 'max', got {direction!r}")
    members = class_members(cls, n, limit)
    if not members:
        if cls.kind in (TreeClassKind.BT, TreeClassKind.DT):
            raise GraphError(
                f"{cls.label(n)} is empty: a tree with b branching vertices needs 1 <= b <= n/2 - 1"
            )
        raise GraphError(f"{cls.label(n)} is empty")
    fn = objective_function(objective)
    sign = 1.0 if direction == "min" else -1.0
    scored = [(sign * fn(t), t) for t in members]
    best = min(s for s, _ in scored)
    tol = 1e-9 * max(1.0, abs(best))
    trees = tuple(t for s, t in scored if s - best <= tol)
    seqs = tuple(sorted({DegreeSequence(t.degrees) for t in trees}, reverse=True))
    return ExtremalResult(sign * best, seqs, trees, len(members))


# Small graphs -----------------------------------------------------------------


def chromatic_number(g: Graph, limit: int = CHROMATIC_MAX_N) -> int:
    """Exact chromatic number by branch and bound over colour assignments."""
    if g.n > limit:
        raise GraphError(f"chromatic_number is limited to n <= {limit} (got {g.n})")
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    colour = [-1] * g.n
    best = g.max_degree + 1  # greedy bound

    def extend(i: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if i == g.n:
            best = used
            return
        v = order[i]
        taken = {colour[w] for w in g.adjacency[v]}
        for c in range(used):
            if c not in taken:
                colour[v] = c
                extend(i + 1, used)
        colour[v] = used
        extend(i + 1, used + 1)
        colour[v] = -1

    extend(0, 0)
    return best


def max_sum_squares(n: int, m: int, limit: int = SUM_SQUARES_MAX_N) -> int:
    """``f(n, m)``: the largest ``sum d(u)^2`` over graphs with ``n`` vertices and ``m`` edges."""
    total = n * (n - 1) // 2
    if m < 0 or m > total:
        raise GraphError(f"m={m} is outside 0..{total} for n={n}")
    if n > limit:
        raise GraphError(f"max_sum_squares is limited to n <= {limit} (got {n})")
    pairs = list(itertools.combinations(range(n), 2))
    best = 0
    for chosen in itertools.combinations(pairs, m):
        deg = [0] * n
        for u, v in chosen:
            deg[u] += 1
            deg[v] += 1
        s = sum(d * d for d in deg)
        if s > best:
            best = s
    return best


@lru_cache(maxsize=None)
def _atlas(n: int) -> tuple[Graph, ...]:
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == n:
            out.append(from_edge_list(list(h.edges()), n))
    return tuple(out)


def all_graphs(n: int, connected: bool = False) -> list[Graph]:
    """Every graph on ``n <= 7`` vertices up to isomorphism."""
    if not 1 <= n <= ATLAS_MAX_N:
        raise GraphError(f"all_graphs needs 1 <= n <= {ATLAS_MAX_N}, got {n}")
    graphs = _atlas(n)
    return [g for g in graphs if is_connected(g)] if connected else list(graphs)
