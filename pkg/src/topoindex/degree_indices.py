"""Degree-based topological indices.

Every index is a function of the degree data only: vertex sums ``sum f(d(v))``,
edge sums ``sum f(d(u), d(v))``, or the corresponding products. Products are
returned as exact integers while they fit in 128 bits.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .graph import Graph, GraphError

EXACT_BITS = 128


class IndexKind(str, enum.Enum):
    M1 = "M1"
    M2 = "M2"
    mM2 = "mM2"
    F = "F"
    Pi1c = "Pi1c"
    Pi2 = "Pi2"
    NK = "NK"
    D1 = "D1"
    D2 = "D2"
    D1star = "D1*"
    SCI = "SCI"
    SDD = "SDD"
    ISI = "ISI"
    H = "H"
    ABC = "ABC"
    AZI = "AZI"
    HM1 = "HM1"
    HM2 = "HM2"
    GA = "GA"
    AG = "AG"
    Randic = "Randic"
    SO = "SO"
    mSO = "mSO"
    SL = "SL"
    SEI = "SEI"
    EAG = "EAG"
    irr = "irr"
    irr_t = "irr_t"
    Var = "Var"
    Sirr = "Sirr"
    sigma = "sigma"
    Lz = "Lz"
    IAG = "IAG"
    Hf = "Hf"

    @classmethod
    def parse(cls, name: "str | IndexKind") -> "IndexKind":
        if isinstance(name, cls):
            return name
        for k in cls:
            if name in (k.value, k.name) or name.lower() in (k.value.lower(), k.name.lower()):
                return k
        raise KeyError(f"unknown degree index {name!r}")


@dataclass(frozen=True)
class IndexParams:
    """Parameters of the parametric indices.

    ``a`` is the base of SEI (``a > 0``, ``a != 1``), ``c`` the exponent of
    Pi1c, ``tau`` the Randic exponent, ``r`` the shift of IAG and ``f`` the
    vertex function of Hf.
    """

    a: float | None = None
    b: float | None = None
    c: float = 1
    tau: float = -0.5
    r: float = 0.0
    f: Callable[[int], float] | None = None

    def __post_init__(self):
        if self.c <= 0:
            raise GraphError(f"Pi1c needs c > 0, got {self.c}")
        if self.r < 0:
            raise GraphError(f"IAG needs r >= 0, got {self.r}")


DEFAULT_PARAMS = IndexParams()


def _exact_or_log(exact: int, log_value: float) -> int | float:
    if exact.bit_length() <= EXACT_BITS:
        return exact
    try:
        return math.exp(log_value)
    except OverflowError:
        return math.inf


def _edge_degrees(g: Graph) -> list[tuple[int, int]]:
    deg = g.degrees
    return [(deg[u], deg[v]) for u, v in g.edges]


def _azi_term(u: int, v: int, x: int, y: int) -> float:
    if x + y == 2:
        raise GraphError(f"AZI undefined: edge ({u}, {v}) has both endpoint degrees 1")
    return (x * y / (x + y - 2)) ** 3


def log_product(g: Graph, kind: IndexKind | str, params: IndexParams = DEFAULT_PARAMS) -> float:
    """Natural log of a multiplicative index (Pi1c, Pi2, NK, D1, D2, D1*)."""
    kind = IndexKind.parse(kind)
    deg = g.degrees
    if any(d == 0 for d in deg) and kind is not IndexKind.D1star:
        return -math.inf
    if kind is IndexKind.Pi1c:
        return params.c * sum(math.log(d) for d in deg)
    if kind in (IndexKind.Pi2, IndexKind.D2):
        return sum(d * math.log(d) for d in deg)
    if kind is IndexKind.NK:
        return sum(math.log(d) for d in deg)
    if kind is IndexKind.D1:
        return 2 * sum(math.log(d) for d in deg)
    if kind is IndexKind.D1star:
        return sum(math.log(x + y) for x, y in _edge_degrees(g))
    raise KeyError(f"{kind.value} is not a multiplicative index")


def _product(g: Graph, kind: IndexKind, params: IndexParams) -> int | float:
    deg = g.degrees
    lp = log_product(g, kind, params)
    if kind is IndexKind.Pi1c:
        if float(params.c).is_integer():
            return _exact_or_log(math.prod(deg) ** int(params.c), lp)
        return math.exp(lp)
    if kind in (IndexKind.Pi2, IndexKind.D2):
        # prod over edges of d(u) d(v) equals prod over vertices of d^d
        return _exact_or_log(math.prod(x * y for x, y in _edge_degrees(g)), lp)
    if kind is IndexKind.NK:
        return _exact_or_log(math.prod(deg), lp)
    if kind is IndexKind.D1:
        return _exact_or_log(math.prod(deg) ** 2, lp)
    return _exact_or_log(math.prod(x + y for x, y in _edge_degrees(g)), lp)


def _sl(d: int) -> float:
    return d * math.sqrt(math.log(d)) if d >= 2 else 0.0


def degree_index(g: Graph, kind: IndexKind | str, params: IndexParams | None = None) -> float:
    """Evaluate one degree-based index on ``g``."""
    kind = IndexKind.parse(kind)
    p = params or DEFAULT_PARAMS
    deg = g.degrees
    ed = _edge_degrees(g)
    n, m = g.n, g.m
    K = IndexKind

    if kind in (K.Pi1c, K.Pi2, K.NK, K.D1, K.D2, K.D1star):
        return _product(g, kind, p)
    if kind is K.M1:
        return sum(d * d for d in deg)
    if kind is K.M2:
        return sum(x * y for x, y in ed)
    if kind is K.mM2:
        return sum(1 / (x * y) for x, y in ed)
    if kind is K.F:
        return sum(d**3 for d in deg)
    if kind is K.SCI:
        return sum(1 / math.sqrt(x + y) for x, y in ed)
    if kind is K.SDD:
        return sum(x / y + y / x for x, y in ed)
    if kind is K.ISI:
        return sum(x * y / (x + y) for x, y in ed)
    if kind is K.H:
        return sum(2 / (x + y) for x, y in ed)
    if kind is K.ABC:
        return sum(math.sqrt((x + y - 2) / (x * y)) for x, y in ed)
    if kind is K.AZI:
        return sum(_azi_term(u, v, x, y) for (u, v), (x, y) in zip(g.edges, ed))
    if kind is K.HM1:
        return sum((x + y) ** 2 for x, y in ed)
    if kind is K.HM2:
        return sum((x * y) ** 2 for x, y in ed)
    if kind is K.GA:
        return sum(2 * math.sqrt(x * y) / (x + y) for x, y in ed)
    if kind is K.AG:
        return sum((x + y) / (2 * math.sqrt(x * y)) for x, y in ed)
    if kind is K.Randic:
        return sum((x * y) ** p.tau for x, y in ed)
    if kind is K.SO:
        return sum(math.hypot(x, y) for x, y in ed)
    if kind is K.mSO:
        return sum(1 / math.hypot(x, y) for x, y in ed)
    if kind is K.SL:
        return sum(_sl(d) for d in deg)
    if kind is K.SEI:
        if p.a is None or p.a <= 0 or p.a == 1:
            raise GraphError(f"SEI needs a base a > 0 with a != 1, got {p.a}")
        return sum(d * p.a**d for d in deg)
    if kind is K.EAG:
        return sum(math.exp((x + y) / (2 * math.sqrt(x * y))) for x, y in ed)
    if kind is K.irr:
        return sum(abs(x - y) for x, y in ed)
    if kind is K.irr_t:
        return total_irregularity(deg)
    if kind is K.Var:
        avg = 2 * m / n
        return sum((d - avg) ** 2 for d in deg) / n
    if kind is K.Sirr:
        avg = 2 * m / n
        return sum(abs(d - avg) for d in deg)
    if kind is K.sigma:
        return sum((x - y) ** 2 for x, y in ed)
    if kind is K.Lz:
        return sum(d * d * (n - 1 - d) for d in deg)
    if kind is K.IAG:
        return ag_irregularity(deg, p.r)
    if kind is K.Hf:
        if p.f is None:
            raise GraphError("Hf needs a vertex function f")
        return sum(p.f(d) for d in deg)
    raise KeyError(kind)


def total_irregularity(degrees: Sequence[int]) -> int:
    """Sum of ``|d(u) - d(v)|`` over unordered vertex pairs (O(n log n))."""
    ds = sorted(degrees)
    total = 0
    prefix = 0
    for i, d in enumerate(ds):
        total += i * d - prefix
        prefix += d
    return total


def ag_irregularity(degrees: Sequence[int], r: float = 0.0) -> float:
    """``1 - n^n prod(d_i + r) / (2m + r n)^n``, evaluated in log space."""
    n = len(degrees)
    total = sum(degrees) + r * n
    if any(d + r <= 0 for d in degrees):
        return 1.0
    log_ratio = n * math.log(n) + sum(math.log(d + r) for d in degrees) - n * math.log(total)
    return -math.expm1(log_ratio)


def hf(degrees: Sequence[int], f: Callable[[int], float]) -> float:
    return sum(f(d) for d in degrees)


def total_irregularity_bound(n: int) -> Fraction:
    """Closed-form maximum of the total irregularity over ``n``-vertex graphs."""
    if n % 2:
        return Fraction(2 * n**3 - 3 * n**2 - 2 * n + 3, 12)
    return Fraction(2 * n**3 - 3 * n**2 - 2 * n, 12)


# Formal evaluations over degree data -----------------------------------------

MATCHING_COLUMNS = ("mM2", "F", "M2", "NK", "D1", "D2", "D1*", "SCI", "SDD")


def matching_formula_indices(degrees: Sequence[int]) -> dict[str, float]:
    """Evaluate the nine edge-pair formulas on consecutive pairs of ``degrees``.

    The sequence is split as ``(d1, d2), (d3, d4), ...`` in the given order and
    each pair is treated as one edge with endpoint degrees ``a_k, b_k``.
    """
    ds = [int(d) for d in degrees]
    if len(ds) % 2:
        raise GraphError(f"need an even number of degrees, got {len(ds)}")
    if any(d <= 0 for d in ds):
        raise GraphError("degrees must be positive")
    pairs = list(zip(ds[0::2], ds[1::2]))
    prod_ab = math.prod(a * b for a, b in pairs)
    return {
        "mM2": sum(1 / (a * b) for a, b in pairs),
        "F": sum(a * a + b * b for a, b in pairs),
        "M2": sum(a * b for a, b in pairs),
        "NK": prod_ab,
        "D1": prod_ab**2,
        "D2": prod_ab,
        "D1*": math.prod(a + b for a, b in pairs),
        "SCI": sum(1 / math.sqrt(a + b) for a, b in pairs),
        "SDD": sum(a / b + b / a for a, b in pairs),
    }


def caterpillar_formula(kind: str, d1: int, k: int) -> float:
    """Closed forms for GA and the sum-connectivity index of the caterpillar family.

    These are evaluated literally; they are not the indices of the graph built
    by :func:`topoindex.generators.caterpillar`.
    """
    if d1 < 2:
        raise GraphError(f"d1 must be >= 2, got {d1}")
    if k < 1:
        raise GraphError(f"k must be >= 1, got {k}")
    kind = kind.upper()
    if kind == "GA":
        return (
            4 * d1 * math.sqrt(d1) / (d1 + 1)
            + 2 * k * d1 * math.sqrt(d1 + 1) / (d1 + 2)
            + 4 * math.sqrt(d1 * (d1 + 1)) / (2 * d1 + 1)
        )
    if kind in ("SCI", "X"):
        return (
            2 * (d1 + 1) / math.sqrt(d1 + 4)
            + k * d1 / math.sqrt(d1 + 3)
            + 2 / math.sqrt(2 * d1 + 3)
        )
    raise KeyError(f"caterpillar_formula supports GA and SCI, got {kind!r}")


def degree_indices_table(g: Graph, kinds: Sequence[IndexKind | str], params: IndexParams | None = None) -> dict[str, float]:
    return {IndexKind.parse(k).value: degree_index(g, k, params) for k in kinds}


def vertex_function(spec: str) -> Callable[[int], float]:
    """Named vertex functions for Hf: ``x^2``, ``xlnx``, ``lz:<n>`` or ``x^<p>``."""
    s = spec.replace(" ", "").lower()
    if s in ("x^2", "x2", "square"):
        return lambda d: d * d
    if s in ("xlnx", "x*ln(x)", "xlogx"):
        return lambda d: d * math.log(d) if d > 0 else 0.0
    if s.startswith("lz:"):
        n = int(s[3:])
        return lambda d: d * d * (n - 1 - d)
    if s.startswith("x^"):
        e = float(s[2:])
        return lambda d: d**e
    raise KeyError(f"unknown vertex function {spec!r}")
