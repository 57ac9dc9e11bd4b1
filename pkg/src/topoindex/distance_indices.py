"""Distance-based indices: Wiener, Szeged, Mostar and (general) Gutman."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .generators import line_graph, star_like
from .graph import Graph, GraphError, all_pairs_distances, edge_splits, is_connected


class DistanceIndexKind(str, enum.Enum):
    W = "W"
    Sz = "Sz"
    Mostar = "Mostar"
    Gut = "Gut"
    GutGeneral = "GutGeneral"

    @classmethod
    def parse(cls, name: "str | DistanceIndexKind") -> "DistanceIndexKind":
        if isinstance(name, cls):
            return name
        for k in cls:
            if name.lower() in (k.value.lower(), k.name.lower()):
                return k
        raise KeyError(f"unknown distance index {name!r}")


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("distance-based indices need a connected graph")


def wiener(g: Graph) -> int:
    _require_connected(g)
    return int(np.triu(all_pairs_distances(g), 1).sum())


def szeged(g: Graph) -> int:
    _require_connected(g)
    return sum(s.n_a * s.n_b for s in edge_splits(g))


def mostar(g: Graph) -> int:
    _require_connected(g)
    return sum(abs(s.n_a - s.n_b) for s in edge_splits(g))


def general_gutman(g: Graph, a: float, b: float) -> float:
    """Sum over unordered pairs of ``(d(u) d(v))^a * dist(u, v)^b``."""
    _require_connected(g)
    if g.n < 2:
        return 0.0
    d = all_pairs_distances(g).astype(float)
    deg = np.array(g.degrees, dtype=float)
    iu = np.triu_indices(g.n, 1)
    return float(np.sum(np.outer(deg, deg)[iu] ** a * d[iu] ** b))


def gutman(g: Graph) -> int:
    _require_connected(g)
    d = all_pairs_distances(g)
    deg = np.array(g.degrees, dtype=np.int64)
    return int(np.triu(np.outer(deg, deg) * d, 1).sum())


def distance_index(g: Graph, kind: DistanceIndexKind | str, a: float = 1.0, b: float = 1.0) -> float:
    kind = DistanceIndexKind.parse(kind)
    if kind is DistanceIndexKind.W:
        return wiener(g)
    if kind is DistanceIndexKind.Sz:
        return szeged(g)
    if kind is DistanceIndexKind.Mostar:
        return mostar(g)
    if kind is DistanceIndexKind.Gut:
        return gutman(g)
    return general_gutman(g, a, b)


def gutman_lower_bound(n: int, a: float) -> float:
    """``n (n - 1)^(2a + 1) / 2``, attained by ``K_n`` when ``a <= 0 <= b``."""
    return n * (n - 1) ** (2 * a + 1) / 2


@dataclass(frozen=True)
class IdentityReport:
    lhs: float
    rhs: float

    @property
    def difference(self) -> float:
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return abs(self.difference) <= 1e-9 * max(1.0, abs(self.rhs))


def mostar_star_like_check(l: int, m: int) -> IdentityReport:
    """Compare ``Mo(T)`` with ``Mo(L(T)) + m l (m - 1)`` for ``T`` = m legs of length l."""
    if l < 1 or m < 2:
        raise GraphError(f"need l >= 1 and m >= 2, got l={l}, m={m}")
    t = star_like(*([l] * m))
    return IdentityReport(float(mostar(t)), float(mostar(line_graph(t)) + m * l * (m - 1)))
