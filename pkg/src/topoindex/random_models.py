"""Configuration-model sampling, giant-component experiments and CLT diagnostics.

All randomness comes from numpy's counter-based Philox generator. Work items
are keyed by ``(seed, index)`` through ``SeedSequence`` so that results do not
depend on execution order.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .graph import DegreeSequence, Graph, GraphError, connected_components, from_edge_list

DEFAULT_RESAMPLE_BUDGET = 50


def make_rng(seed: int, *keys: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([int(seed), *map(int, keys)])))


# Degree profiles --------------------------------------------------------------


@dataclass(frozen=True)
class DegreeProfile:
    """Limiting fraction ``lambda_i`` of vertices with degree ``i``."""

    fractions: tuple[tuple[int, float], ...]

    def __post_init__(self):
        items = tuple(sorted((int(k), float(v)) for k, v in dict(self.fractions).items()))
        if not items:
            raise GraphError("degree profile is empty")
        if any(k < 0 for k, _ in items) or any(v < 0 for _, v in items):
            raise GraphError(f"degrees and fractions must be non-negative: {items}")
        total = sum(v for _, v in items)
        if abs(total - 1.0) > 1e-9:
            raise GraphError(f"profile fractions sum to {total:.12g}, not 1")
        object.__setattr__(self, "fractions", items)

    @classmethod
    def from_mapping(cls, m: Mapping[int, float]) -> "DegreeProfile":
        return cls(tuple(m.items()))

    def realize(self, n: int) -> DegreeSequence:
        """Degree sequence with ``round(lambda_i n)`` vertices of degree ``i``.

        Counts are repaired by largest remainder to total ``n``; an odd degree
        sum is fixed by raising one smallest-degree vertex by one.
        """
        if n < 1:
            raise GraphError(f"need n >= 1, got {n}")
        raw = [(k, v * n) for k, v in self.fractions]
        counts = {k: int(math.floor(x)) for k, x in raw}
        short = n - sum(counts.values())
        by_remainder = sorted(raw, key=lambda kx: (-(kx[1] - math.floor(kx[1])), kx[0]))
        for k, _ in by_remainder[:short]:
            counts[k] += 1
        degrees = [k for k, c in counts.items() for _ in range(c)]
        if sum(degrees) % 2:
            i = degrees.index(min(degrees))
            degrees[i] += 1
        return DegreeSequence(degrees)

    def __str__(self) -> str:
        return ",".join(f"{k}:{v:g}" for k, v in self.fractions)


def parse_profile(text: str) -> DegreeProfile:
    """Parse ``"1:0.5,3:0.5"``."""
    out = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        k, _, v = part.partition(":")
        if not v:
            raise GraphError(f"profile entry {part!r} is not of the form degree:fraction")
        out[int(k)] = out.get(int(k), 0.0) + float(v)
    return DegreeProfile.from_mapping(out)


def q_parameter(profile: DegreeProfile | Mapping[int, float]) -> float:
    """``Q = sum_i i (i - 2) lambda_i``; positive means a giant component."""
    items = profile.fractions if isinstance(profile, DegreeProfile) else profile.items()
    return float(sum(i * (i - 2) * lam for i, lam in items))


# Configuration model ----------------------------------------------------------


@dataclass(frozen=True)
class ConfigurationSample:
    graph: Graph
    attempts: int
    loops: int  # erased after the resampling budget ran out
    multi_edges: int

    @property
    def degree_deficit(self) -> int:
        return 2 * self.loops + 2 * self.multi_edges


def _pair_stubs(stubs: np.ndarray, rng: np.random.Generator) -> tuple[np.ndarray, int, int]:
    perm = rng.permutation(stubs).reshape(-1, 2)
    u = np.minimum(perm[:, 0], perm[:, 1])
    v = np.maximum(perm[:, 0], perm[:, 1])
    loops = int(np.sum(u == v))
    keep = u != v
    pairs = np.unique(np.stack([u[keep], v[keep]], axis=1), axis=0) if keep.any() else np.zeros((0, 2), int)
    multis = int(keep.sum()) - len(pairs)
    return pairs, loops, multis


def sample_configuration(
    degrees, seed: int, budget: int = DEFAULT_RESAMPLE_BUDGET, rng: np.random.Generator | None = None
) -> ConfigurationSample:
    """Uniform pairing of half-edges, resampled until simple or the budget runs out.

    A pairing that is still not simple after ``budget`` attempts has its loops
    and repeated edges erased; the counts are recorded in the result.
    """
    d = list(degrees)
    if any(x < 0 for x in d):
        raise GraphError("degrees must be non-negative")
    if sum(d) % 2:
        raise GraphError(f"degree sum {sum(d)} is odd; no pairing exists")
    n = len(d)
    rng = rng or make_rng(seed)
    stubs = np.repeat(np.arange(n), d)
    attempts = 0
    while True:
        attempts += 1
        pairs, loops, multis = _pair_stubs(stubs, rng)
        if (loops == 0 and multis == 0) or attempts >= max(1, budget):
            break
    return ConfigurationSample(from_edge_list(pairs.tolist(), n), attempts, loops, multis)


def largest_component_fraction(g: Graph) -> float:
    if g.n == 0:
        return 0.0
    return max(len(c) for c in connected_components(g)) / g.n


@dataclass(frozen=True)
class GiantComponentReport:
    profile: str
    q: float
    n: int
    seed: int
    fractions: tuple[float, ...]
    erased: tuple[int, ...]  # erased loops + multi-edges per trial

    @property
    def median(self) -> float:
        return float(np.median(self.fractions))

    def quantiles(self) -> dict[str, float]:
        qs = np.quantile(self.fractions, [0.1, 0.5, 0.9])
        return {"q10": float(qs[0]), "q50": float(qs[1]), "q90": float(qs[2])}

    def summary(self) -> dict:
        return {
            "profile": self.profile,
            "Q": self.q,
            "n": self.n,
            "seed": self.seed,
            "trials": len(self.fractions),
            "median": self.median,
            "mean": float(np.mean(self.fractions)),
            **self.quantiles(),
            "fractions": list(self.fractions),
            "erased": list(self.erased),
        }


def _giant_trial(args) -> tuple[float, int]:
    degrees, seed, trial, budget = args
    s = sample_configuration(degrees, seed, budget, rng=make_rng(seed, trial))
    return largest_component_fraction(s.graph), s.loops + s.multi_edges


def giant_component_experiment(
    profile: DegreeProfile,
    n: int,
    trials: int,
    seed: int,
    budget: int = DEFAULT_RESAMPLE_BUDGET,
    workers: int = 1,
) -> GiantComponentReport:
    """Largest-component fraction of the configuration model over independent trials."""
    if trials < 1:
        raise GraphError("need at least one trial")
    degrees = tuple(profile.realize(n))
    jobs = [(degrees, seed, t, budget) for t in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_giant_trial, jobs))
    else:
        results = [_giant_trial(j) for j in jobs]
    return GiantComponentReport(
        str(profile),
        q_parameter(profile),
        n,
        seed,
        tuple(r[0] for r in results),
        tuple(r[1] for r in results),
    )


# Heterogeneous random graphs --------------------------------------------------


@dataclass(frozen=True)
class HeterogeneousModel:
    """Independent edges with ``P(ij) = p * w[i, j]`` and ``w[i, j]`` in ``[beta, 1]``."""

    p: float
    w: np.ndarray = field(repr=False)
    beta: float = 1.0

    def __post_init__(self):
        w = np.asarray(self.w, dtype=float)
        n = w.shape[0]
        if w.ndim != 2 or w.shape != (n, n):
            raise GraphError(f"weight matrix must be square, got shape {w.shape}")
        if not 0 < self.beta <= 1:
            raise GraphError(f"beta must lie in (0, 1], got {self.beta}")
        if not 0 <= self.p < 1:
            raise GraphError(f"p must lie in [0, 1), got {self.p}")
        if not np.allclose(w, w.T, atol=0):
            raise GraphError("weight matrix must be symmetric")
        if np.any(np.diag(w) != 0):
            raise GraphError("weight matrix must have a zero diagonal")
        off = w[~np.eye(n, dtype=bool)]
        if off.size and (off.min() < self.beta - 1e-12 or off.max() > 1 + 1e-12):
            raise GraphError(f"off-diagonal weights must lie in [{self.beta}, 1]")
        if off.size and self.p * off.max() >= 1:
            raise GraphError("edge probabilities p * w must stay below 1")
        object.__setattr__(self, "w", w)

    @property
    def n(self) -> int:
        return self.w.shape[0]

    @classmethod
    def uniform(cls, n: int, p: float) -> "HeterogeneousModel":
        return cls(p, np.ones((n, n)) - np.eye(n), 1.0)

    @classmethod
    def random_weights(cls, n: int, p: float, beta: float, seed: int) -> "HeterogeneousModel":
        rng = make_rng(seed)
        w = np.triu(rng.uniform(beta, 1.0, size=(n, n)), 1)
        return cls(p, w + w.T, beta)


def _sample_adjacency(model: HeterogeneousModel, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    iu = np.triu_indices(model.n, 1)
    hit = rng.random(len(iu[0])) < model.p * model.w[iu]
    return iu[0][hit], iu[1][hit]


def sample_heterogeneous(model: HeterogeneousModel, seed: int) -> Graph:
    u, v = _sample_adjacency(model, make_rng(seed))
    return from_edge_list(zip(u.tolist(), v.tolist()), model.n)


EdgeFunction = Callable[[np.ndarray, np.ndarray], np.ndarray]


def edge_function(spec: str) -> EdgeFunction:
    """``randic:<tau>`` for ``(xy)^tau``, ``one``, ``sum`` or ``product``."""
    s = spec.replace(" ", "").lower()
    if s.startswith("randic"):
        tau = float(s.split(":", 1)[1]) if ":" in s else -0.5
        return lambda x, y: (x * y) ** tau
    if s == "one":
        return lambda x, y: np.ones_like(x, dtype=float)
    if s == "sum":
        return lambda x, y: x + y
    if s == "product":
        return lambda x, y: x * y
    raise KeyError(f"unknown edge function {spec!r}")


def expected_index(model: HeterogeneousModel, f: EdgeFunction) -> float:
    """``sum_{i<j} p w_ij f(w_i(j), w_j(i))`` with ``w_i(j) = p * sum_{k != j} w_ik``."""
    w = model.w
    rows = w.sum(axis=1)
    e = model.p * (rows[:, None] - w)  # e[i, j] = w_i(j)
    iu = np.triu_indices(model.n, 1)
    return float(np.sum(model.p * w[iu] * f(e[iu], e.T[iu])))


def _normal_cdf(z: np.ndarray) -> np.ndarray:
    return 0.5 * (1.0 + np.vectorize(math.erf)(z / math.sqrt(2.0)))


@dataclass(frozen=True)
class CltReport:
    samples: int
    values: tuple[float, ...] = field(repr=False)
    mean: float
    variance: float
    skewness: float
    excess_kurtosis: float
    cdf_gap: float
    expected_mean: float

    @property
    def mean_relative_error(self) -> float:
        return abs(self.mean - self.expected_mean) / abs(self.expected_mean)

    def standardized(self) -> np.ndarray:
        x = np.asarray(self.values)
        return (x - self.mean) / math.sqrt(self.variance)

    def summary(self) -> dict:
        return {
            "samples": self.samples,
            "mean": self.mean,
            "variance": self.variance,
            "skewness": self.skewness,
            "excess_kurtosis": self.excess_kurtosis,
            "cdf_gap": self.cdf_gap,
            "expected_mean": self.expected_mean,
            "mean_relative_error": self.mean_relative_error,
        }


def clt_experiment(model: HeterogeneousModel, f: "str | EdgeFunction", samples: int, seed: int) -> CltReport:
    """Monte Carlo distribution of ``sum_{ij in E} f(d_i, d_j)`` on the model."""
    if samples < 100:
        raise GraphError(f"need at least 100 samples, got {samples}")
    fn = edge_function(f) if isinstance(f, str) else f
    values = np.empty(samples)
    for s in range(samples):
        u, v = _sample_adjacency(model, make_rng(seed, s))
        deg = np.bincount(np.concatenate([u, v]), minlength=model.n).astype(float)
        values[s] = float(np.sum(fn(deg[u], deg[v]))) if len(u) else 0.0
    mean = float(values.mean())
    var = float(values.var())
    if var <= 1e-24 * max(1.0, mean * mean):
        raise GraphError("index values have zero variance; the model is degenerate")
    z = (values - mean) / math.sqrt(var)
    zs = np.sort(z)
    cdf = _normal_cdf(zs)
    k = np.arange(1, samples + 1)
    gap = float(max(np.max(k / samples - cdf), np.max(cdf - (k - 1) / samples)))
    return CltReport(
        samples,
        tuple(values.tolist()),
        mean,
        var,
        float(np.mean(z**3)),
        float(np.mean(z**4) - 3.0),
        gap,
        expected_index(model, fn),
    )
