"""Closed-form identities and bounds that the harness checks against direct computation."""

from __future__ import annotations

import math
from typing import Callable, Sequence

from .degree_indices import degree_index
from .graph import DegreeSequence, Graph, GraphError

SQRT2 = math.sqrt(2.0)


# Sombor index and thorny graphs ----------------------------------------------


def sombor_sandwich(g: Graph) -> tuple[float, float]:
    """``(M1 / sqrt 2, M1)``: SO lies in ``[lower, upper)`` whenever ``g`` has an edge."""
    m1 = degree_index(g, "M1")
    return m1 / SQRT2, float(m1)


def thorny_sombor_formula(g: Graph, p: Sequence[int], literal: bool = False) -> float:
    """Sombor index of the thorny graph from the base graph and pendant counts.

    Edge ``v_i v_j`` contributes ``sqrt((d_i + p_i)^2 + (d_j + p_j)^2)`` and each
    pendant at ``v_i`` contributes ``sqrt((d_i + p_i)^2 + 1)``. With
    ``literal=True`` the second term of the edge part uses ``d_i + p_j`` instead.
    """
    deg = g.degrees
    total = 0.0
    for i, j in g.edges:
        a = deg[i] + p[i]
        b = (deg[i] if literal else deg[j]) + p[j]
        total += math.hypot(a, b)
    for i in range(g.n):
        total += p[i] * math.hypot(deg[i] + p[i], 1)
    return total


def thorn_regular_sombor(n: int, r: int, p: int) -> float:
    """Sombor index of the thorn-regular graph of an ``r``-regular graph."""
    return SQRT2 * n * r / 2 * (r + p) + n * p * math.sqrt((r + p) ** 2 + 1)


def thorn_uniform_sombor(big_d: int, m: int, n: int, n_star: int) -> float:
    """Sombor index when every ``d(v_i) + p_i`` equals ``big_d``."""
    return SQRT2 * big_d * m + math.sqrt(big_d**2 + 1) * (n_star - n)


def thorny_sandwich_base(g: Graph, p: Sequence[int]) -> int:
    """``M1(G) + 2 sum p_i d_i + sum p_i (p_i + 1)``, which equals ``M1`` of the thorny graph."""
    deg = g.degrees
    return int(degree_index(g, "M1")) + 2 * sum(pi * d for pi, d in zip(p, deg)) + sum(pi * (pi + 1) for pi in p)


def sombor_edge_root_bound(g: Graph) -> float:
    """``sum_uv sqrt(1 / (d_u^2 + d_v^2) + d_u + d_v)``."""
    deg = g.degrees
    return sum(
        math.sqrt(1 / (deg[u] ** 2 + deg[v] ** 2) + deg[u] + deg[v]) for u, v in g.edges
    )


def sombor_degree_bound(g: Graph) -> float:
    """``Delta n sqrt(2 (n - 1 - delta))``."""
    return g.max_degree * g.n * math.sqrt(2 * (g.n - 1 - g.min_degree))


# Hf over tree classes ---------------------------------------------------------

VertexFn = Callable[[int], float]


def _value(seq: Sequence[int], f: VertexFn) -> float:
    return sum(f(d) for d in seq)


def pendant_class_min(n: int, p: int, f: VertexFn) -> tuple[float, DegreeSequence]:
    """Minimum of ``Hf`` over trees with ``p`` pendant vertices, ``2 <= p <= n - 1``."""
    if not 2 <= p <= n - 1:
        raise GraphError(f"need 2 <= p <= n - 1, got p={p}, n={n}")
    r = (n - 2) // (n - p) + 1
    hi = n - (r - 1) * (n - p) - 2
    mid = (r - 1) * (n - p) - p + 2
    seq = DegreeSequence([r + 1] * hi + [r] * mid + [1] * p)
    return hi * f(r + 1) + mid * f(r) + p * f(1), seq


def pendant_class_max(n: int, p: int, f: VertexFn) -> tuple[float, DegreeSequence]:
    if not 2 <= p <= n - 1:
        raise GraphError(f"need 2 <= p <= n - 1, got p={p}, n={n}")
    seq = DegreeSequence([p] + [2] * (n - p - 1) + [1] * p)
    return p * f(1) + (n - p - 1) * f(2) + f(p), seq


def segment_class_min(n: int, s: int, f: VertexFn) -> tuple[float, DegreeSequence]:
    """Minimum of ``Hf`` over trees with ``s`` segments, ``3 <= s <= n - 2``.

    Odd ``s``: ``(s - 1)/2`` threes and ``(s + 3)/2`` leaves. Even ``s``: one
    four, ``(s - 4)/2`` threes and ``(s + 4)/2`` leaves. Degree-2 vertices fill
    the remaining ``n - s - 1`` places.
    """
    if not 3 <= s <= n - 2:
        raise GraphError(f"need 3 <= s <= n - 2, got s={s}, n={n}")
    if s % 2:
        seq = [3] * ((s - 1) // 2) + [2] * (n - s - 1) + [1] * ((s + 3) // 2)
    else:
        seq = [4] + [3] * ((s - 4) // 2) + [2] * (n - s - 1) + [1] * ((s + 4) // 2)
    seq = DegreeSequence(seq)
    return _value(seq, f), seq


def segment_class_min_printed(n: int, s: int, f: VertexFn) -> float:
    """The even-``s`` expression with a ``(s - 1)/2`` coefficient on ``f(3)``, taken literally."""
    if s % 2:
        return (s - 1) / 2 * f(3) + (n - s - 1) * f(2) + (s + 3) / 2 * f(1)
    return f(4) + (s - 1) / 2 * f(3) + (n - s - 1) * f(2) + (s + 4) / 2 * f(1)


def branching_class_min(n: int, b: int, f: VertexFn) -> tuple[float, DegreeSequence]:
    """Minimum of ``Hf`` over trees with ``b`` branching vertices, ``1 <= b <= n/2 - 1``."""
    if not (1 <= b and 2 * b <= n - 2):
        raise GraphError(f"need 1 <= b <= n/2 - 1, got b={b}, n={n}")
    seq = DegreeSequence([3] * b + [2] * (n - 2 * b - 2) + [1] * (b + 2))
    return b * f(3) + (n - 2 * b - 2) * f(2) + (b + 2) * f(1), seq


def matching_class_min(m: int, f: VertexFn) -> tuple[float, DegreeSequence]:
    """Minimum over trees on ``2m`` vertices with a perfect matching (the path)."""
    if m < 2:
        raise GraphError(f"need m >= 2, got {m}")
    seq = DegreeSequence([2] * (2 * m - 2) + [1, 1])
    return 2 * (m - 1) * f(2) + 2 * f(1), seq


def matching_class_max(m: int, f: VertexFn) -> tuple[float, DegreeSequence]:
    """Maximum over trees on ``2m`` vertices with a perfect matching.

    Attained by the star ``S_{m+1}`` with ``m - 1`` of its leaves extended by
    one edge each.
    """
    if m < 2:
        raise GraphError(f"need m >= 2, got {m}")
    seq = DegreeSequence([m] + [2] * (m - 1) + [1] * m)
    return f(m) + (m - 1) * f(2) + m * f(1), seq


def lz_branching_bound(n: int, b: int) -> int:
    return 9 * b * (n - 4) + 4 * (n - 2 * b - 2) * (n - 3) + (b + 2) * (n - 2)


def lz_matching_bound(m: int) -> int:
    return 8 * (m - 1) * (2 * m - 3) + 4 * (m - 1)


# Sum of squared degrees -------------------------------------------------------


def sum_squares_window(m: int) -> tuple[float, float]:
    """``(m sqrt(8m + 1) - 3m, m sqrt(8m + 1) - m)``."""
    root = m * math.sqrt(8 * m + 1)
    return root - 3 * m, root - m


# AG-irregularity family bounds ------------------------------------------------


def _iag(log_prod: float, n: int, denom: float) -> float:
    return -math.expm1(n * math.log(n) + log_prod - n * math.log(denom))


def iag_tree_bounds(n: int, r: float) -> tuple[float, float]:
    lo = _iag((n - 2) * math.log(r + 2) + 2 * math.log(1 + r), n, r * n + 2 * n - 2)
    hi = _iag((n - 1) * math.log(1 + r) + math.log(n - 1 + r), n, r * n + 2 * n - 2)
    return lo, hi


def iag_unicyclic_upper(n: int, r: float) -> float:
    return _iag((n - 3) * math.log(1 + r) + 2 * math.log(r + 2) + math.log(n - 1 + r), n, (r + 2) * n)


def iag_bicyclic_bounds(n: int, r: float) -> tuple[float, float]:
    denom = r * n + 2 * n + 2
    lo = _iag((n - 2) * math.log(r + 2) + 2 * math.log(3 + r), n, denom)
    hi = _iag(
        (n - 4) * math.log(1 + r) + 2 * math.log(r + 2) + math.log(3 + r) + math.log(n - 1 + r), n, denom
    )
    return lo, hi
