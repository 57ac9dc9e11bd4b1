"""Claim registry and verification suite.

Each claim pairs a statement with a deterministic corpus and a checker. A
claim is either VERIFIED (a violation fails the suite) or REPORT-ONLY (its
violations are recorded but never fail the suite; every such claim carries a
written reason). Items are named by fingerprints so that any violation can be
replayed on its own with :func:`replay`.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
import os
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

import numpy as np

from . import bounds
from .degree_indices import IndexParams, degree_index, log_product, total_irregularity, total_irregularity_bound, vertex_function
from .distance_indices import general_gutman, mostar, szeged, wiener
from .dsl import edges_spec, parse_graph_spec, thorn_spec
from .enumeration import (
    TreeClass,
    all_graphs,
    all_trees,
    chemical_trees,
    chromatic_number,
    classify,
    extremal_search,
    labeled_tree_count,
    majorization_chain,
    majorizes,
    max_sum_squares,
    tree_degree_sequences,
    trees_with_degree_sequence,
)
from .generators import balanced_parts, complete_multipartite, double_star, line_graph, star_like, subdivision
from .graph import DegreeSequence, Graph, GraphError, canonical_tree_code, connected_components, is_connected, is_tree
from .random_models import (
    HeterogeneousModel,
    clt_experiment,
    giant_component_experiment,
    make_rng,
    parse_profile,
)
from .spectral import (
    adjacency_spectrum,
    closed_walk_count,
    eigen_symmetric,
    skn_vertex_energy,
    skn_vertex_energy_numeric,
    sombor_matrix,
    subdivision_charpoly_check,
    vertex_energies,
)

MAX_RECORDED_VIOLATIONS = 25
MAX_RECORDED_EQUALITIES = 10
REL_TOL = 1e-9


class Status(str, enum.Enum):
    VERIFIED = "VERIFIED"
    REPORT_ONLY = "REPORT-ONLY"


@dataclass(frozen=True)
class Item:
    fingerprint: str
    params: tuple[tuple[str, Any], ...] = ()

    def get(self, key: str, default=None):
        return dict(self.params).get(key, default)

    @property
    def graph(self) -> Graph:
        return parse_graph_spec(self.fingerprint)


def item(fingerprint: str, **params) -> Item:
    return Item(fingerprint, tuple(sorted(params.items())))


@dataclass(frozen=True)
class Outcome:
    label: str
    holds: bool
    lhs: float
    rhs: float
    equality: bool = False


def _tol(rhs: float) -> float:
    return REL_TOL * max(1.0, abs(rhs))


def _is_exact(*xs) -> bool:
    return all(isinstance(x, (int, np.integer)) for x in xs)


def le(label: str, lhs, rhs) -> Outcome:
    if _is_exact(lhs, rhs):
        return Outcome(label, lhs <= rhs, lhs, rhs, lhs == rhs)
    return Outcome(label, lhs <= rhs + _tol(rhs), float(lhs), float(rhs), abs(lhs - rhs) <= _tol(rhs))


def lt(label: str, lhs, rhs) -> Outcome:
    """Strict inequality; floats must clear ``rhs`` by the relative tolerance."""
    if _is_exact(lhs, rhs):
        return Outcome(label, lhs < rhs, lhs, rhs, lhs == rhs)
    return Outcome(label, lhs <= rhs - _tol(rhs), float(lhs), float(rhs), abs(lhs - rhs) <= _tol(rhs))


def ge(label: str, lhs, rhs) -> Outcome:
    out = le(label, rhs, lhs)
    return Outcome(label, out.holds, out.rhs, out.lhs, out.equality)


def gt(label: str, lhs, rhs) -> Outcome:
    out = lt(label, rhs, lhs)
    return Outcome(label, out.holds, out.rhs, out.lhs, out.equality)


def close(label: str, lhs, rhs, rel: float = REL_TOL) -> Outcome:
    ok = abs(lhs - rhs) <= rel * max(1.0, abs(rhs))
    return Outcome(label, ok, float(lhs), float(rhs), ok)


def iff(label: str, equal: bool, expected: bool) -> Outcome:
    """Equality case characterisation: ``equal`` must coincide with ``expected``."""
    return Outcome(label, equal == expected, float(equal), float(expected), equal and expected)


@dataclass(frozen=True)
class Claim:
    id: str
    name: str
    statement: str
    source: str
    status: Status
    corpus: Callable[[dict, int], list[Item]]
    check: Callable[[Item], list[Outcome]]
    defaults: dict = field(default_factory=dict)
    reason: str | None = None

    def __post_init__(self):
        if self.status is Status.REPORT_ONLY and not self.reason:
            raise ValueError(f"report-only claim {self.id} needs a reason")


@dataclass(frozen=True)
class Violation:
    fingerprint: str
    params: dict
    label: str
    lhs: float
    rhs: float

    def to_dict(self) -> dict:
        return {"fingerprint": self.fingerprint, "params": self.params, "label": self.label, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class ClaimReport:
    claim_id: str
    name: str
    status: Status
    corpus_size: int
    checks: int
    violation_count: int
    violations: list[Violation]
    equality_count: int
    equality_witnesses: list[str]
    runtime: float = 0.0
    error: str | None = None

    @property
    def failed(self) -> bool:
        return self.status is Status.VERIFIED and (self.violation_count > 0 or self.error is not None)

    @property
    def verdict(self) -> str:
        if self.error is not None:
            return "ERROR"
        if self.status is Status.REPORT_ONLY:
            return "REPORTED"
        return "FAIL" if self.violation_count else "PASS"

    def to_dict(self) -> dict:
        claim = REGISTRY[self.claim_id]
        return {
            "id": self.claim_id,
            "name": self.name,
            "status": self.status.value,
            "statement": claim.statement,
            "source": claim.source,
            "reason": claim.reason,
            "verdict": self.verdict,
            "corpus_size": self.corpus_size,
            "checks": self.checks,
            "violation_count": self.violation_count,
            "violations": [v.to_dict() for v in self.violations],
            "equality_count": self.equality_count,
            "equality_witnesses": self.equality_witnesses,
            "error": self.error,
        }


# Corpus helpers ---------------------------------------------------------------


def _rng_for(seed: int, key: str):
    return make_rng(seed, zlib.crc32(key.encode()))


def random_graph_items(count: int, n_lo: int, n_hi: int, extra_hi: int, seed: int, key: str, extra_lo: int = 0) -> list[Item]:
    rng = _rng_for(seed, key)
    out = []
    for _ in range(count):
        n = int(rng.integers(n_lo, n_hi + 1))
        extra = int(rng.integers(extra_lo, extra_hi + 1))
        s = int(rng.integers(0, 2**62))
        out.append(item(f"rcg:n={n},extra={extra},seed={s}"))
    return out


def tree_items(n_lo: int, n_hi: int) -> list[Item]:
    return [item(edges_spec(t)) for n in range(n_lo, n_hi + 1) for t in all_trees(n)]


def graph_items(n_lo: int, n_hi: int, connected: bool = True, min_edges: int = 0) -> list[Item]:
    return [
        item(edges_spec(g))
        for n in range(n_lo, n_hi + 1)
        for g in all_graphs(n, connected=connected)
        if g.m >= min_edges
    ]


REGULAR_BASES = (
    [f"cycle:{k}" for k in range(3, 11)]
    + [f"complete:{k}" for k in range(2, 8)]
    + ["petersen", "kpartite:3,3", "kpartite:4,4", "kpartite:2,2,2", "kpartite:2,2,2,2"]
)


def _split_thorn(fp: str) -> tuple[Graph, list[int]]:
    base, _, p = fp.rpartition("|thorn:")
    return parse_graph_spec(base), [int(x) for x in p.split(",")]


def _random_thorn_items(count: int, seed: int, key: str, p_max: int, allow_zero: bool, n_hi: int = 15) -> list[Item]:
    rng = _rng_for(seed, key)
    out = []
    for _ in range(count):
        n = int(rng.integers(2, n_hi + 1))
        extra = int(rng.integers(0, 6))
        s = int(rng.integers(0, 2**62))
        p = [int(x) for x in rng.integers(0, p_max + 1, size=n)]
        if not allow_zero and not any(p):
            p[int(rng.integers(0, n))] = 1
        out.append(item(thorn_spec(f"rcg:n={n},extra={extra},seed={s}", p)))
    return out


# Checks -----------------------------------------------------------------------


def _so(g: Graph) -> float:
    return degree_index(g, "SO")


def check_sombor_sandwich(it: Item) -> list[Outcome]:
    g = it.graph
    lo, hi = bounds.sombor_sandwich(g)
    so = _so(g)
    return [le("M1/sqrt2 <= SO", lo, so), lt("SO < M1", so, hi)]


def corpus_sombor_sandwich(cfg: dict, seed: int) -> list[Item]:
    return tree_items(2, cfg["tree_max_n"]) + random_graph_items(
        cfg["random"], 2, cfg["random_max_n"], cfg["random_max_extra"], seed, "C1"
    )


def check_thorny_identity(it: Item) -> list[Outcome]:
    g, p = _split_thorn(it.fingerprint)
    return [close("SO(G*) = formula", _so(it.graph), bounds.thorny_sombor_formula(g, p))]


def check_thorny_identity_printed(it: Item) -> list[Outcome]:
    g, p = _split_thorn(it.fingerprint)
    return [close("SO(G*) = printed formula", _so(it.graph), bounds.thorny_sombor_formula(g, p, literal=True))]


def corpus_thorny(cfg: dict, seed: int) -> list[Item]:
    return _random_thorn_items(cfg["count"], seed, "C2", cfg["p_max"], True)


def corpus_thorny_printed(cfg: dict, seed: int) -> list[Item]:
    return _random_thorn_items(cfg["count"], seed, "C2P", cfg["p_max"], True)


def corpus_thorn_regular(cfg: dict, seed: int) -> list[Item]:
    rng = _rng_for(seed, "C3")
    out = []
    for i in range(cfg["count"]):
        base = REGULAR_BASES[i % len(REGULAR_BASES)]
        n = parse_graph_spec(base).n
        p = int(rng.integers(0, cfg["p_max"] + 1))
        out.append(item(thorn_spec(base, [p] * n)))
    return out


def check_thorn_regular(it: Item) -> list[Outcome]:
    g, p = _split_thorn(it.fingerprint)
    r = g.degrees[0]
    return [close("SO(G*) = regular formula", _so(it.graph), bounds.thorn_regular_sombor(g.n, r, p[0]))]


def corpus_thorn_uniform(cfg: dict, seed: int) -> list[Item]:
    rng = _rng_for(seed, "C4")
    out = []
    for _ in range(cfg["count"]):
        n = int(rng.integers(2, 13))
        base = f"rcg:n={n},extra={int(rng.integers(0, 5))},seed={int(rng.integers(0, 2**62))}"
        g = parse_graph_spec(base)
        big_d = g.max_degree + int(rng.integers(0, 3))
        out.append(item(thorn_spec(base, [big_d - d for d in g.degrees])))
    return out


def check_thorn_uniform(it: Item) -> list[Outcome]:
    g, p = _split_thorn(it.fingerprint)
    big_d = g.degrees[0] + p[0]
    star = it.graph
    return [close("SO(G*) = uniform formula", _so(star), bounds.thorn_uniform_sombor(big_d, g.m, g.n, star.n))]


def check_thorny_sandwich(it: Item) -> list[Outcome]:
    g, p = _split_thorn(it.fingerprint)
    b = bounds.thorny_sandwich_base(g, p)
    so = _so(it.graph)
    return [lt("B/sqrt2 < SO(G*)", b / bounds.SQRT2, so), lt("SO(G*) < B", so, float(b))]


def corpus_thorny_sandwich(cfg: dict, seed: int) -> list[Item]:
    return _random_thorn_items(cfg["count"], seed, "C5", cfg["p_max"], False)


def corpus_thorny_p0(cfg: dict, seed: int) -> list[Item]:
    items = [item(thorn_spec(b, [0] * parse_graph_spec(b).n)) for b in REGULAR_BASES]
    return items + _random_thorn_items(cfg["count"], seed, "C5b", 0, True)


def check_thorny_below_m1(it: Item) -> list[Outcome]:
    g, _ = _split_thorn(it.fingerprint)
    return [lt("SO(G*) < M1(G)", _so(it.graph), float(degree_index(g, "M1")))]


def corpus_small_named(cfg: dict, seed: int) -> list[Item]:
    named = [f"cycle:{k}" for k in range(3, 9)] + [f"complete:{k}" for k in range(3, 7)]
    named += [f"path:{k}" for k in range(2, 7)] + [f"star:{k}" for k in range(3, 7)] + ["petersen"]
    return [item(x) for x in named] + random_graph_items(cfg["random"], 2, 20, 10, seed, cfg.get("key", "C6"))


def check_sombor_root_bound(it: Item) -> list[Outcome]:
    g = it.graph
    return [le("SO <= sum sqrt(1/(du^2+dv^2) + du + dv)", _so(g), bounds.sombor_edge_root_bound(g))]


def check_sombor_degree_bound(it: Item) -> list[Outcome]:
    g = it.graph
    return [le("SO <= Delta n sqrt(2(n-1-delta))", _so(g), bounds.sombor_degree_bound(g))]


def _grid(cfg: dict) -> list[tuple[float, float]]:
    return [(float(a), float(b)) for a in cfg["a"] for b in cfg["b"] if (a, b) != (0, 0)]


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _is_balanced_multipartite(g: Graph, k: int) -> bool:
    comp = g.complement()
    sizes = []
    for c in connected_components(comp):
        cs = set(c)
        if any(comp.adjacency[v] - cs or len(comp.adjacency[v]) != len(c) - 1 for v in c):
            return False
        sizes.append(len(c))
    return sorted(sizes) == sorted(balanced_parts(g.n, k))


def _gutman_check(direction: str):
    def check(it: Item) -> list[Outcome]:
        g = it.graph
        cfg = dict(it.params)
        out = []
        for a, b in _grid(cfg):
            val = general_gutman(g, a, b)
            bound = bounds_gutman(g.n, a)
            tag = f"a={a:g},b={b:g}"
            if direction == "lower":
                o = ge(f"Gut >= n(n-1)^(2a+1)/2 [{tag}]", val, bound)
            else:
                o = le(f"Gut <= n(n-1)^(2a+1)/2 [{tag}]", val, bound)
            out.append(o)
            out.append(iff(f"equality iff complete [{tag}]", o.equality, _is_complete(g)))
        return out

    return check


def bounds_gutman(n: int, a: float) -> float:
    return n * (n - 1) ** (2 * a + 1) / 2


def _with_grid(items: list[Item], cfg: dict) -> list[Item]:
    return [item(it.fingerprint, a=tuple(cfg["a"]), b=tuple(cfg["b"])) for it in items]


def corpus_gutman_graphs(cfg: dict, seed: int) -> list[Item]:
    return _with_grid(graph_items(2, cfg["graph_max_n"]), cfg)


def corpus_gutman_edge_add(cfg: dict, seed: int) -> list[Item]:
    rng = _rng_for(seed, "C8")
    grid = _grid(cfg)
    out = []
    while len(out) < cfg["count"]:
        n = int(rng.integers(3, cfg["max_n"] + 1))
        fp = f"rcg:n={n},extra={int(rng.integers(0, n))},seed={int(rng.integers(0, 2**62))}"
        g = parse_graph_spec(fp)
        missing = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
        if not missing:
            continue
        u, v = missing[int(rng.integers(0, len(missing)))]
        a, b = grid[int(rng.integers(0, len(grid)))]
        out.append(item(fp, u=u, v=v, a=a, b=b))
    return out


def check_gutman_edge_add(it: Item) -> list[Outcome]:
    g = it.graph
    a, b = it.get("a"), it.get("b")
    h = g.add_edge(it.get("u"), it.get("v"))
    return [lt(f"Gut(G+e) < Gut(G) [a={a:g},b={b:g}]", general_gutman(h, a, b), general_gutman(g, a, b))]


def check_gutman_chromatic(it: Item) -> list[Outcome]:
    g = it.graph
    chi = chromatic_number(g)
    out = []
    for a, b in _grid(dict(it.params)):
        tag = f"a={a:g},b={b:g}"
        val = general_gutman(g, a, b)
        ref = general_gutman(complete_multipartite(balanced_parts(g.n, chi)), a, b)
        o = ge(f"Gut >= Gut(balanced K_chi) [{tag}]", val, ref)
        out.append(o)
        out.append(iff(f"equality iff balanced complete chi-partite [{tag}]", o.equality, _is_balanced_multipartite(g, chi)))
        for k in range(chi + 1, g.n + 1):
            ref_k = general_gutman(complete_multipartite(balanced_parts(g.n, k)), a, b)
            out.append(ge(f"Gut >= Gut(balanced K_{k}) [{tag}]", val, ref_k))
    return out


def check_gutman_kpartite_reverse(it: Item) -> list[Outcome]:
    g = it.graph
    chi = chromatic_number(g)
    out = []
    for a, b in _grid(dict(it.params)):
        val = general_gutman(g, a, b)
        for k in range(chi, g.n + 1):
            ref = general_gutman(complete_multipartite(balanced_parts(g.n, k)), a, b)
            out.append(le(f"Gut <= Gut(balanced K_{k}) [a={a:g},b={b:g}]", val, ref))
    return out


def check_wiener_szeged(it: Item) -> list[Outcome]:
    g = it.graph
    w, sz = wiener(g), szeged(g)
    out = [le("W <= Sz", w, sz)]
    if is_tree(g):
        out.append(Outcome("W = Sz on trees", w == sz, w, sz, w == sz))
    return out


def corpus_wiener_szeged(cfg: dict, seed: int) -> list[Item]:
    return tree_items(2, cfg["tree_max_n"]) + random_graph_items(
        cfg["random"], 3, cfg["random_max_n"], cfg["max_cyclomatic"], seed, "C10"
    )


def _non_bridge_edges(g: Graph) -> list[tuple[int, int]]:
    return [e for e in g.edges if is_connected(g.remove_edges([e]))]


def _fundamental_cycles(g: Graph) -> list[list[tuple[int, int]]]:
    parent = {0: -1}
    order = [0]
    for u in order:
        for w in sorted(g.adjacency[u]):
            if w not in parent:
                parent[w] = u
                order.append(w)
    tree_edges = {tuple(sorted((v, p))) for v, p in parent.items() if p >= 0}

    def path_to_root(v):
        out = [v]
        while parent[out[-1]] >= 0:
            out.append(parent[out[-1]])
        return out

    cycles = []
    for u, v in g.edges:
        if (u, v) in tree_edges:
            continue
        pu, pv = path_to_root(u), path_to_root(v)
        common = set(pu) & set(pv)
        lca = next(x for x in pu if x in common)
        walk = pu[: pu.index(lca) + 1] + list(reversed(pv[: pv.index(lca)]))
        cyc = [tuple(sorted((walk[i], walk[i + 1]))) for i in range(len(walk) - 1)] + [(u, v)]
        cycles.append(cyc)
    return cycles


def _zagreb_drop(g: Graph, h: Graph, tag: str) -> list[Outcome]:
    out = [
        lt(f"M1 drops [{tag}]", int(degree_index(h, "M1")), int(degree_index(g, "M1"))),
        lt(f"M2 drops [{tag}]", int(degree_index(h, "M2")), int(degree_index(g, "M2"))),
        lt(f"log Pi2 drops [{tag}]", log_product(h, "Pi2"), log_product(g, "Pi2")),
    ]
    for c in (0.5, 1.0, 2.0):
        prm = IndexParams(c=c)
        out.append(lt(f"log Pi1c drops c={c:g} [{tag}]", log_product(h, "Pi1c", prm), log_product(g, "Pi1c", prm)))
    return out


def check_zagreb_deletion(it: Item) -> list[Outcome]:
    g = it.graph
    out = []
    for e in _non_bridge_edges(g):
        out += _zagreb_drop(g, g.remove_edges([e]), f"edge {e[0]}-{e[1]}")
    for cyc in _fundamental_cycles(g):
        h = g.remove_edges(cyc)
        if is_connected(h):
            out += _zagreb_drop(g, h, f"cycle of length {len(cyc)}")
    return out


def corpus_zagreb(cfg: dict, seed: int) -> list[Item]:
    return random_graph_items(cfg["random"], 3, cfg["random_max_n"], 8, seed, "C11", extra_lo=1)


def _irregularity_data(g: Graph):
    n, m = g.n, g.m
    lam = adjacency_spectrum(g).eigenvalues
    avg = 2 * m / n
    var = sum((d - avg) ** 2 for d in g.degrees) / n
    s = sum(abs(d - avg) for d in g.degrees)
    return lam, float(lam[0]) - avg, var, s


def check_nikiforov_chains(it: Item) -> list[Outcome]:
    g = it.graph
    n, m = g.n, g.m
    _, cs, var, s = _irregularity_data(g)
    root = 2 * math.sqrt(2 * m)
    return [
        le("Var/(2 sqrt(2m)) <= CS", var / root, cs),
        le("CS <= sqrt(S)", cs, math.sqrt(s)),
        le("S^2/(2 n^2 sqrt(2m)) <= CS", s * s / (n * n * root), cs),
        le("CS <= (n^2 Var)^(1/4)", cs, (n * n * var) ** 0.25),
        le("S^2/n^2 <= Var", s * s / (n * n), var),
        le("Var <= S", var, s),
    ]


def check_complement_eigenvalues(it: Item) -> list[Outcome]:
    g = it.graph
    n = g.n
    lam, _, _, s = _irregularity_data(g)
    lc = adjacency_spectrum(g.complement()).eigenvalues
    out = [le("lambda_n(G) + lambda_n(Gc) <= -1 - S^2/(2n^3)", float(lam[-1] + lc[-1]), -1 - s * s / (2 * n**3))]
    worst = max(range(2, n + 1), key=lambda k: lam[k - 1] + lc[n - k + 1])
    out.append(
        le(
            f"lambda_k(G) + lambda_(n-k+2)(Gc) <= -1 - 2 sqrt(2S) [worst k={worst}]",
            float(lam[worst - 1] + lc[n - worst + 1]),
            -1 - 2 * math.sqrt(2 * s),
        )
    )
    return out


def corpus_irregularity(cfg: dict, seed: int) -> list[Item]:
    return graph_items(2, cfg["graph_max_n"], connected=False, min_edges=1) + random_graph_items(
        cfg["random"], 3, 20, 15, seed, cfg.get("key", "C12")
    )


def corpus_irr_t(cfg: dict, seed: int) -> list[Item]:
    return [item(f"allgraphs:n={n}", n=n) for n in range(2, cfg["max_n"] + 1)]


def check_irr_t(it: Item) -> list[Outcome]:
    n = it.get("n")
    best = max(total_irregularity(g.degrees) for g in all_graphs(n))
    bound = total_irregularity_bound(n)
    b = int(bound) if bound.denominator == 1 else float(bound)
    return [le("max irr_t <= closed form", best, b), close("max irr_t = closed form", best, float(bound))]


HF_FUNCTIONS = ("x^2", "xlnx")


def corpus_hf(cfg: dict, seed: int) -> list[Item]:
    out = []
    nmax = cfg["max_n"]
    for f in HF_FUNCTIONS:
        for n in range(3, nmax + 1):
            for p in range(2, n):
                out.append(item(f"extremal:PT:n={n},p={p},f={f},min", cls="PT", n=n, k=p, f=f, dir="min"))
                out.append(item(f"extremal:PT:n={n},p={p},f={f},max", cls="PT", n=n, k=p, f=f, dir="max"))
            for s in range(3, n - 1):
                out.append(item(f"extremal:ST:n={n},s={s},f={f},min", cls="ST", n=n, k=s, f=f, dir="min"))
            for b in range(1, (n - 2) // 2 + 1):
                for cls in ("BT", "DT"):
                    out.append(item(f"extremal:{cls}:n={n},b={b},f={f},min", cls=cls, n=n, k=b, f=f, dir="min"))
        for m in range(2, cfg["max_2m"] // 2 + 1):
            for d in ("min", "max"):
                out.append(item(f"extremal:MT:n={2 * m},f={f},{d}", cls="MT", n=2 * m, k=m, f=f, dir=d))
    return out


def _hf_expected(cls: str, n: int, k: int, f, direction: str):
    if cls == "PT":
        return (bounds.pendant_class_min if direction == "min" else bounds.pendant_class_max)(n, k, f)
    if cls == "ST":
        return bounds.segment_class_min(n, k, f)
    if cls in ("BT", "DT"):
        return bounds.branching_class_min(n, k, f)
    return (bounds.matching_class_min if direction == "min" else bounds.matching_class_max)(k, f)


def check_hf(it: Item) -> list[Outcome]:
    cls, n, k, fs, d = it.get("cls"), it.get("n"), it.get("k"), it.get("f"), it.get("dir")
    f = vertex_function(fs)
    res = extremal_search(TreeClass(cls, 0 if cls == "MT" else k), n, "hf:" + fs, d)
    value, seq = _hf_expected(cls, n, k, f, d)
    out = [close(f"{d} Hf = closed form", res.value, value)]
    out.append(Outcome("witness degree sequence", res.witnesses == (seq,), float(len(res.witnesses)), 1.0))
    if cls == "MT":
        target = star_like(*([2] * (k - 1) + [1])) if d == "max" else None
        ok = all(
            (canonical_tree_code(t) == canonical_tree_code(target)) if target else max(t.degrees) <= 2
            for t in res.trees
        )
        out.append(Outcome("unique extremal tree", ok and len(res.trees) == 1, float(len(res.trees)), 1.0))
    return out


def corpus_st_printed(cfg: dict, seed: int) -> list[Item]:
    return [
        item(f"extremal:ST:n={n},s={s},f={f},min", n=n, k=s, f=f)
        for f in HF_FUNCTIONS
        for n in range(5, cfg["max_n"] + 1)
        for s in range(4, n - 1, 2)
    ]


def check_st_printed(it: Item) -> list[Outcome]:
    n, s, fs = it.get("n"), it.get("k"), it.get("f")
    res = extremal_search(TreeClass("ST", s), n, "hf:" + fs, "min")
    return [close("min Hf = printed even-s expression", res.value, bounds.segment_class_min_printed(n, s, vertex_function(fs)))]


def corpus_lz(cfg: dict, seed: int) -> list[Item]:
    n = cfg["n"]
    out = [item(f"lz:{cls}:n={n},b={b}", cls=cls, n=n, k=b) for cls in ("BT", "DT") for b in range(1, (n - 2) // 2 + 1)]
    if n % 2 == 0:
        out.append(item(f"lz:MT:n={n}", cls="MT", n=n, k=n // 2))
    return out


def check_lz(it: Item) -> list[Outcome]:
    cls, n, k = it.get("cls"), it.get("n"), it.get("k")
    members = [t for t in chemical_trees(n) if TreeClass(cls, k).contains(t)]
    lz = [int(degree_index(t, "Lz")) for t in members]
    if cls == "MT":
        bound = bounds.lz_matching_bound(k)
        expected = [max(t.degrees) <= 2 for t in members]
    else:
        bound = bounds.lz_branching_bound(n, k)
        _, seq = bounds.branching_class_min(n, k, lambda x: x)
        expected = [DegreeSequence(t.degrees) == seq for t in members]
    worst = min(lz) if lz else bound
    mismatched = sum(1 for v, e in zip(lz, expected) if (v == bound) != e)
    return [
        ge("min Lz >= bound", worst, bound),
        Outcome("equality exactly at the stated trees", mismatched == 0 and any(expected), float(mismatched), 0.0),
    ]


def corpus_skn(cfg: dict, seed: int) -> list[Item]:
    return [item(f"sub-complete:n={n}", n=n) for n in range(2, cfg["max_n"] + 1)]


def check_skn(it: Item) -> list[Outcome]:
    n = it.get("n")
    orig, sub = skn_vertex_energy(n)
    e_orig, e_sub = skn_vertex_energy_numeric(n)
    return [
        Outcome("original vertices", float(np.max(np.abs(e_orig - orig))) <= 1e-6, float(np.max(np.abs(e_orig - orig))), 1e-6),
        Outcome("subdivision vertices", float(np.max(np.abs(e_sub - sub))) <= 1e-6, float(np.max(np.abs(e_sub - sub))), 1e-6),
    ]


def check_energy_split(it: Item) -> list[Outcome]:
    g = it.graph
    s = adjacency_spectrum(g)
    return [close("energy = sum of vertex energies", float(np.sum(vertex_energies(g, s))), s.energy, rel=1e-8)]


def check_closed_walks(it: Item) -> list[Outcome]:
    g = it.graph
    s = adjacency_spectrum(g)
    worst = 0.0
    for v in range(g.n):
        moments = s.weights[v] @ np.vander(s.eigenvalues, 7, increasing=True)
        for k in range(7):
            exact = closed_walk_count(g, v, k)
            worst = max(worst, abs(moments[k] - exact) / max(1.0, exact))
    return [Outcome("spectral moments = closed walk counts (k <= 6)", worst <= 1e-6, worst, 1e-6)]


def corpus_all_small(cfg: dict, seed: int) -> list[Item]:
    return graph_items(1, cfg["graph_max_n"], connected=False)


def corpus_charpoly(cfg: dict, seed: int) -> list[Item]:
    names = [f"cycle:{k}" for k in range(3, 11)] + [f"complete:{k}" for k in range(2, 7)]
    return [item(x) for x in names + ["petersen", "kpartite:3,3"]]


def check_charpoly(it: Item) -> list[Outcome]:
    c = subdivision_charpoly_check(it.graph)
    return [Outcome("coefficient deviation <= 1e-6", c.max_deviation <= 1e-6, c.max_deviation, 1e-6)]


def check_frobenius(it: Item) -> list[Outcome]:
    g = it.graph
    s = sombor_matrix(g)
    return [close("||S||_F^2 = 2F", float(np.sum(s * s)), 2.0 * degree_index(g, "F"))]


def _spread_outcomes(g: Graph, tag: str) -> list[Outcome]:
    s = eigen_symmetric(sombor_matrix(g))
    f = degree_index(g, "F")
    mu1 = float(s.eigenvalues[0])
    mid = mu1 + math.sqrt(max(0.0, 2 * f - mu1 * mu1))
    left = le(f"s <= mu1 + sqrt(2F - mu1^2) [{tag}]", s.spread, mid)
    right = le(f"mu1 + sqrt(2F - mu1^2) <= 2 sqrt(F) [{tag}]", mid, 2 * math.sqrt(f))
    bip = _is_complete_bipartite(g)
    return [
        left,
        right,
        iff(f"equality on the left iff complete bipartite [{tag}]", left.equality, bip),
        iff(f"equality on the right iff complete bipartite [{tag}]", right.equality, bip),
    ]


def _is_complete_bipartite(g: Graph) -> bool:
    if g.m == 0 or not is_connected(g):
        return False
    comps = connected_components(g.complement())
    return len(comps) == 2 and all(
        all(len(g.complement().adjacency[v]) == len(c) - 1 for v in c) for c in comps
    )


def check_spread(it: Item) -> list[Outcome]:
    g = it.graph
    return _spread_outcomes(g, "Sombor matrix of G") + _spread_outcomes(subdivision(g), "Sombor matrix of S(G)")


def corpus_spread(cfg: dict, seed: int) -> list[Item]:
    named = ["kpartite:1,3", "kpartite:2,2", "kpartite:2,3", "kpartite:3,3", "cycle:5", "complete:4", "path:4"]
    return [item(x) for x in named] + random_graph_items(cfg["random"], 2, cfg["random_max_n"], 5, seed, "C18b")


def corpus_fnm(cfg: dict, seed: int) -> list[Item]:
    return [
        item(f"fnm:n={n},m={m}", n=n, m=m)
        for n in range(2, cfg["max_n"] + 1)
        for m in range(math.ceil(n * (n - 1) / 4), n * (n - 1) // 2 + 1)
        if m >= 1
    ]


def check_fnm(it: Item) -> list[Outcome]:
    n, m = it.get("n"), it.get("m")
    f = max_sum_squares(n, m)
    lo, hi = bounds.sum_squares_window(m)
    return [le("m sqrt(8m+1) - 3m <= f(n,m)", lo, f), le("f(n,m) <= m sqrt(8m+1) - m", f, hi)]


def check_mostar_double_star(it: Item) -> list[Outcome]:
    t = it.graph
    return [lt("Mo(L(T)) < Mo(T)", mostar(line_graph(t)), mostar(t))]


def corpus_double_stars(cfg: dict, seed: int) -> list[Item]:
    return [item(f"doublestar:{n}") for n in range(1, cfg["max_n"] + 1)]


def corpus_star_like(cfg: dict, seed: int) -> list[Item]:
    return [
        item("starlike:" + ",".join([str(l)] * m), l=l, m=m)
        for l in range(1, cfg["max_l"] + 1)
        for m in range(2, cfg["max_m"] + 1)
    ]


def check_star_like_remark(it: Item) -> list[Outcome]:
    t = it.graph
    l, m = it.get("l"), it.get("m")
    rhs = mostar(line_graph(t)) + m * l * (m - 1)
    return [Outcome("Mo(T) = Mo(L(T)) + m l (m - 1)", mostar(t) == rhs, mostar(t), rhs, mostar(t) == rhs)]


def _is_cocktail_party(g: Graph) -> bool:
    return g.n % 2 == 0 and all(d == g.n - 2 for d in g.degrees)


def check_gn_conditional(it: Item) -> list[Outcome]:
    g = it.graph
    n = g.n
    q = n - 1 if n % 2 else n - 2
    m1 = int(degree_index(g, "M1"))
    log_pi1 = log_product(g, "Pi1c")
    if m1 > n * q * q or log_pi1 > n * math.log(q) + 1e-12:
        return []
    extremal = _is_complete(g) if n % 2 else _is_cocktail_party(g)
    m2 = le("M2 <= n q^3 / 2", int(degree_index(g, "M2")) * 2, n * q**3)
    pi2 = le("log Pi2 <= n q log q", log_product(g, "Pi2"), n * q * math.log(q))
    return [m2, pi2, iff("M2 equality iff extremal graph", m2.equality, extremal), iff("Pi2 equality iff extremal graph", pi2.equality, extremal)]


def corpus_connected(cfg: dict, seed: int) -> list[Item]:
    return graph_items(cfg.get("min_n", 2), cfg["graph_max_n"])


def check_cyclic_lower(it: Item) -> list[Outcome]:
    g = it.graph
    if g.min_degree < 2:
        return []
    n = g.n
    cyc = g.m == n and all(d == 2 for d in g.degrees)
    out = [
        ge("M1 >= 4n", int(degree_index(g, "M1")), 4 * n),
        ge("M2 >= 4n", int(degree_index(g, "M2")), 4 * n),
        ge("log Pi1c >= c n log 2 (c=1)", log_product(g, "Pi1c"), n * math.log(2)),
        ge("log Pi2 >= n log 4", log_product(g, "Pi2"), n * math.log(4)),
    ]
    return out + [iff(f"equality iff cycle ({o.label})", o.equality, cyc) for o in out]


IAG_R = (0.0, 0.5, 1.0, 2.0)


def corpus_iag(cfg: dict, seed: int) -> list[Item]:
    out = tree_items(3, cfg["tree_max_n"])
    for n in range(4, cfg["graph_max_n"] + 1):
        for g in all_graphs(n, connected=True):
            if g.m in (n, n + 1):
                out.append(item(edges_spec(g)))
    return out


def check_iag(it: Item) -> list[Outcome]:
    g = it.graph
    n = g.n
    deg = sorted(g.degrees, reverse=True)
    out = []
    for r in IAG_R:
        val = degree_index(g, "IAG", IndexParams(r=r))
        tag = f"r={r:g}"
        if g.m == n - 1:
            lo, hi = bounds.iag_tree_bounds(n, r)
            out += [ge(f"tree lower [{tag}]", val, lo), le(f"tree upper [{tag}]", val, hi)]
        elif g.m == n:
            hi = bounds.iag_unicyclic_upper(n, r)
            o = le(f"unicyclic upper [{tag}]", val, hi)
            star_e = deg == [n - 1, 2, 2] + [1] * (n - 3)
            out += [ge(f"unicyclic lower [{tag}]", val, 0.0), o, iff(f"unicyclic upper equality iff S_n^e [{tag}]", o.equality, star_e)]
        else:
            lo, hi = bounds.iag_bicyclic_bounds(n, r)
            a = ge(f"bicyclic lower [{tag}]", val, lo)
            b = le(f"bicyclic upper [{tag}]", val, hi)
            out += [
                a,
                b,
                iff(f"bicyclic lower equality iff (3,3,2,..,2) [{tag}]", a.equality, deg == [3, 3] + [2] * (n - 2)),
                iff(f"bicyclic upper equality iff S_n^2e [{tag}]", b.equality, deg == [n - 1, 3, 2, 2] + [1] * (n - 4)),
            ]
    return out


AMGM_R = (0.0, 0.5, 1.0, 3.0)


def check_am_gm(it: Item) -> list[Outcome]:
    g = it.graph
    n = g.n
    regular = g.is_regular()
    out = []
    for r in AMGM_R:
        log_ratio = n * math.log(n) + sum(math.log(d + r) for d in g.degrees) - n * math.log(2 * g.m + r * n)
        o = le(f"n^n prod(d+r) / (2m+rn)^n <= 1 [r={r:g}]", math.exp(log_ratio), 1.0)
        out += [o, iff(f"equality iff regular [r={r:g}]", o.equality, regular)]
    return out


def check_eag(it: Item) -> list[Outcome]:
    g = it.graph
    deg = g.degrees
    balanced = all(deg[u] == deg[v] for u, v in g.edges)
    o = ge("EAG >= m e", degree_index(g, "EAG"), g.m * math.e)
    return [o, iff("equality iff every edge is degree-balanced", o.equality, balanced)]


def corpus_degree_graphs(cfg: dict, seed: int) -> list[Item]:
    return graph_items(2, cfg["graph_max_n"]) + random_graph_items(cfg["random"], 2, 25, 20, seed, cfg.get("key", "C24"))


def corpus_majorization(cfg: dict, seed: int) -> list[Item]:
    out = []
    for n in range(2, cfg["max_n"] + 1):
        seqs = list(tree_degree_sequences(n))
        for a in seqs:
            for b in seqs:
                if majorizes(a, b):
                    out.append(item(f"major:{','.join(map(str, a))}<{','.join(map(str, b))}", a=tuple(a), b=tuple(b)))
    return out


def check_majorization(it: Item) -> list[Outcome]:
    a, b = it.get("a"), it.get("b")
    chain = majorization_chain(a, b)
    ok = chain[0] == DegreeSequence(a) and chain[-1] == DegreeSequence(b)
    for x, y in zip(chain, chain[1:]):
        diff = [i for i in range(len(x)) if x[i] != y[i]]
        ok &= len(diff) == 2 and y[diff[0]] == x[diff[0]] + 1 and y[diff[1]] == x[diff[1]] - 1
        ok &= majorizes(x, y) and y.is_tree_feasible()
    return [Outcome("chain of single +1/-1 moves ending at the target", ok, float(len(chain)), float(len(chain)))]


def corpus_prufer(cfg: dict, seed: int) -> list[Item]:
    return [
        item("prufer:" + ",".join(map(str, d)), d=tuple(d))
        for n in range(2, cfg["max_n"] + 1)
        for d in tree_degree_sequences(n)
    ]


def check_prufer(it: Item) -> list[Outcome]:
    d = DegreeSequence(it.get("d"))
    trees = list(trees_with_degree_sequence(d, labeled=True))
    expected = labeled_tree_count(d)
    exact = all(t.degrees == tuple(d) for t in trees) and len({t.edges for t in trees}) == len(trees)
    return [
        Outcome("labeled count = multinomial", len(trees) == expected, len(trees), expected, len(trees) == expected),
        Outcome("vertex i gets degree d_i, all distinct", exact, float(exact), 1.0),
    ]


def corpus_giant(cfg: dict, seed: int) -> list[Item]:
    return [
        item(f"config:profile={p},n={cfg['n']},trials={cfg['trials']}", profile=p, n=cfg["n"], trials=cfg["trials"], seed=seed)
        for p in ("1:0.5,3:0.5", "1:0.8,3:0.2")
    ]


def check_giant(it: Item) -> list[Outcome]:
    rep = giant_component_experiment(parse_profile(it.get("profile")), it.get("n"), it.get("trials"), it.get("seed"))
    if rep.q > 0:
        return [gt("median largest fraction > 0.2 (Q > 0)", rep.median, 0.2)]
    return [lt("median largest fraction < 0.05 (Q < 0)", rep.median, 0.05)]


def corpus_giant_boundary(cfg: dict, seed: int) -> list[Item]:
    return [item(f"config:profile=2:1,n={cfg['n']},trials={cfg['trials']}", profile="2:1", n=cfg["n"], trials=cfg["trials"], seed=seed)]


def check_giant_boundary(it: Item) -> list[Outcome]:
    rep = giant_component_experiment(parse_profile(it.get("profile")), it.get("n"), it.get("trials"), it.get("seed"))
    return [Outcome("median largest fraction at Q = 0 (recorded)", True, rep.median, rep.q)]


def corpus_clt(cfg: dict, seed: int) -> list[Item]:
    return [
        item(f"clt:f={f},n={cfg['n']},p={cfg['p']},samples={cfg['samples']}", f=f, n=cfg["n"], p=cfg["p"], samples=cfg["samples"], seed=seed)
        for f in ("randic:-0.5", "one")
    ]


def check_clt(it: Item) -> list[Outcome]:
    model = HeterogeneousModel.uniform(it.get("n"), it.get("p"))
    rep = clt_experiment(model, it.get("f"), it.get("samples"), it.get("seed"))
    return [
        lt("|skewness| < 0.2", abs(rep.skewness), 0.2),
        lt("|excess kurtosis| < 0.5", abs(rep.excess_kurtosis), 0.5),
        lt("normal CDF max gap < 0.08", rep.cdf_gap, 0.08),
        lt("relative error of the mean < 0.05", rep.mean_relative_error, 0.05),
    ]


# Registry ---------------------------------------------------------------------

V, R = Status.VERIFIED, Status.REPORT_ONLY
GUT_LOWER = {"graph_max_n": 6, "a": (-1, -0.5, 0), "b": (0.5, 1)}

CLAIMS: list[Claim] = [
    Claim("C1", "sombor_m1_sandwich", "M1/sqrt(2) <= SO < M1", "well-known Sombor estimates", V,
          corpus_sombor_sandwich, check_sombor_sandwich,
          {"tree_max_n": 10, "random": 1000, "random_max_n": 40, "random_max_extra": 40}),
    Claim("C2", "thorny_sombor_identity", "SO(G*) = sum_ij sqrt((d_i+p_i)^2 + (d_j+p_j)^2) + sum_i p_i sqrt((d_i+p_i)^2 + 1)",
          "Sombor index of thorny graphs", V, corpus_thorny, check_thorny_identity, {"count": 200, "p_max": 3}),
    Claim("C2P", "thorny_identity_as_printed", "edge term with d(v_i)+p_j in the second slot",
          "Sombor index of thorny graphs (printed form)", R, corpus_thorny_printed, check_thorny_identity_printed,
          {"count": 50, "p_max": 3},
          reason="The printed edge term repeats d(v_i) for the second endpoint; it only agrees with the direct value when neighbours have equal degree."),
    Claim("C3", "thorn_regular_formula", "SO(G*) = (sqrt2 n r / 2)(r + p) + n p sqrt((r+p)^2 + 1)",
          "Sombor index of thorn-regular graphs", V, corpus_thorn_regular, check_thorn_regular, {"count": 50, "p_max": 4}),
    Claim("C4", "thorn_uniform_D", "SO(G*) = sqrt2 D m + sqrt(D^2 + 1)(n* - n) when d_i + p_i = D",
          "Sombor index of degree-uniform thorny graphs", V, corpus_thorn_uniform, check_thorn_uniform, {"count": 50}),
    Claim("C5", "thorny_sandwich", "B/sqrt2 < SO(G*) < B, B = M1(G) + 2 sum p_i d_i + sum p_i(p_i+1)",
          "thorny Sombor bounds", V, corpus_thorny_sandwich, check_thorny_sandwich, {"count": 200, "p_max": 3}),
    Claim("C5b", "thorny_sandwich_p0", "thorny Sombor bounds at p = 0", "thorny Sombor bounds, boundary case", R,
          corpus_thorny_p0, check_thorny_sandwich, {"count": 30},
          reason="With every p_i = 0 the left inequality becomes M1/sqrt2 < SO, which is an equality on regular graphs."),
    Claim("C5c", "thorny_below_m1", "SO(G*) < M1(G)", "consequence stated after the thorny bounds", R,
          corpus_thorny_sandwich, check_thorny_below_m1, {"count": 100, "p_max": 3},
          reason="The bounds give SO(G*) < M1(G*); replacing M1(G*) by M1(G) fails once pendants are attached."),
    Claim("C6", "sombor_upper_eq1", "SO <= sum_uv sqrt(1/(du^2+dv^2) + du + dv)", "upper bound of the Sombor index", R,
          corpus_small_named, check_sombor_root_bound, {"random": 100, "key": "C6"},
          reason="Contradicted by C3: each edge gives 2 sqrt2 = 2.828 on the left and sqrt(4.125) = 2.031 on the right."),
    Claim("C6b", "sombor_degree_bound", "SO <= Delta n sqrt(2(n - 1 - delta))", "intermediate bound in the same argument", R,
          corpus_small_named, check_sombor_degree_bound, {"random": 100, "key": "C6b"},
          reason="The right side vanishes for complete graphs (delta = n - 1) while SO > 0."),
    Claim("C7", "gutman_lower", "Gut_ab >= n(n-1)^(2a+1)/2 for a <= 0 <= b, equality iff K_n", "general Gutman lower bound", V,
          corpus_gutman_graphs, _gutman_check("lower"), dict(GUT_LOWER)),
    Claim("C7r", "gutman_upper_reverse", "Gut_ab <= n(n-1)^(2a+1)/2 for b <= 0 <= a, equality iff K_n",
          "general Gutman reversed bound", V, corpus_gutman_graphs, _gutman_check("upper"),
          {"graph_max_n": 6, "a": (0, 0.5, 1), "b": (-1, -0.5, 0)}),
    Claim("C8", "gutman_edge_add", "Gut_ab(G + uv) < Gut_ab(G) for a <= 0 <= b", "edge addition lowers Gut_ab", V,
          corpus_gutman_edge_add, check_gutman_edge_add, {"count": 500, "max_n": 12, "a": (-1, -0.5, 0), "b": (0.5, 1)}),
    Claim("C9", "gutman_chromatic", "Gut_ab(G) >= Gut_ab(balanced K_{n_1..n_chi}), equality iff G is that graph",
          "general Gutman index and chromatic number", V, corpus_gutman_graphs, check_gutman_chromatic, dict(GUT_LOWER)),
    Claim("C9r", "gutman_kpartite_reverse", "Gut_ab(G) <= Gut_ab(balanced K_k) for k-partite G, 0 <= a < 1/2, b <= 0",
          "reverse k-partite Gutman bound", V, corpus_gutman_graphs, check_gutman_kpartite_reverse,
          {"graph_max_n": 6, "a": (0, 0.25, 0.4), "b": (-1, -0.5, 0)}),
    Claim("C10", "wiener_szeged", "W <= Sz, with equality on trees", "Wiener and Szeged indices", V,
          corpus_wiener_szeged, check_wiener_szeged, {"tree_max_n": 10, "random": 500, "random_max_n": 20, "max_cyclomatic": 3}),
    Claim("C11", "zagreb_edge_deletion", "M1, M2, Pi1c, Pi2 strictly drop under connected edge or cycle deletion",
          "Zagreb edge-deletion lemmas", V, corpus_zagreb, check_zagreb_deletion, {"random": 150, "random_max_n": 12}),
    Claim("C12", "nikiforov_chains", "Var/(2 sqrt(2m)) <= CS <= sqrt(S); S^2/(2n^2 sqrt(2m)) <= CS <= (n^2 Var)^(1/4); S^2/n^2 <= Var <= S",
          "irregularity chains for CS, Var and S", V, corpus_irregularity, check_nikiforov_chains, {"graph_max_n": 6, "random": 200}),
    Claim("C12b", "complement_eigenvalues", "lambda_n(G)+lambda_n(Gc) <= -1 - S^2/(2n^3); lambda_k(G)+lambda_(n-k+2)(Gc) <= -1 - 2 sqrt(2S)",
          "complement eigenvalue inequalities", R, corpus_irregularity, check_complement_eigenvalues,
          {"graph_max_n": 6, "random": 50, "key": "C12b"},
          reason="The second inequality fails already for regular graphs with S = 0 and k = 2; the printed index or sign is likely garbled."),
    Claim("C13", "irr_t_max", "irr_t(G) <= (2n^3 - 3n^2 - 2n + 3)/12 (n odd), (2n^3 - 3n^2 - 2n)/12 (n even)",
          "total irregularity", R, corpus_irr_t, check_irr_t, {"max_n": 7},
          reason="Printed as an identity for every graph; only its reading as the maximum over n-vertex graphs can hold."),
    Claim("C14", "hf_class_minima", "extremal Hf over PT, ST, BT, DT and MT classes for strictly convex f",
          "extremal vertex-degree function index theorems", V, corpus_hf, check_hf, {"max_n": 10, "max_2m": 10}),
    Claim("C14b", "st_even_as_printed", "even-s minimum with coefficient (s-1)/2 on f(3)", "segment-class minimum (printed form)", R,
          corpus_st_printed, check_st_printed, {"max_n": 10},
          reason="The printed even-s coefficient (s-1)/2 is not an integer; the attained minimum uses (s-4)/2 threes and (s+4)/2 leaves."),
    Claim("C15", "lz_corollaries", "Lz(T) >= 9b(n-4) + 4(n-2b-2)(n-3) + (b+2)(n-2); Lz(T) >= 8(m-1)(2m-3) + 4(m-1)",
          "Lz corollaries for chemical trees", V, corpus_lz, check_lz, {"n": 14}),
    Claim("C16", "skn_energy", "vertex energies of S(K_n) match the closed forms", "vertex energy of subdivided complete graphs", V,
          corpus_skn, check_skn, {"max_n": 8}),
    Claim("C16e", "energy_decomposition", "E(G) = sum_v E_G(v)", "vertex energy decomposition", V,
          corpus_all_small, check_energy_split, {"graph_max_n": 6}),
    Claim("C16w", "closed_walk_moments", "sum_j p_ij lambda_j^k counts closed k-walks at v_i", "spectral moments", V,
          corpus_all_small, check_closed_walks, {"graph_max_n": 6}),
    Claim("C17", "subdivision_charpoly", "phi(S(G); x) = x^(m-n) phi(G; x^2 - r) for r-regular G",
          "characteristic polynomial of subdivision graphs", V, corpus_charpoly, check_charpoly, {}),
    Claim("C18", "frobenius_2F", "||Sombor matrix||_F^2 = 2F", "Frobenius norm of the Sombor matrix", V,
          lambda cfg, seed: random_graph_items(cfg["random"], 2, 20, 15, seed, "C18"), check_frobenius, {"random": 200}),
    Claim("C18b", "sombor_spread_bound", "s <= mu1 + sqrt(2F - mu1^2) <= 2 sqrt(F), equality iff complete bipartite",
          "Sombor spread bound under two readings", R, corpus_spread, check_spread, {"random": 30, "random_max_n": 8},
          reason="The matrix S(G) is not pinned down (Sombor matrix of G or of the subdivision graph) and the equality case is asserted without proof; both readings are reported."),
    Claim("C19", "nikiforov_fnm", "m sqrt(8m+1) - 3m <= f(n,m) <= m sqrt(8m+1) - m for m >= n(n-1)/4",
          "maximum sum of squared degrees", V, corpus_fnm, check_fnm, {"max_n": 6}),
    Claim("C20", "mostar_double_star", "Mo(L(T_n)) < Mo(T_n) for double stars", "Mostar index of double stars", V,
          corpus_double_stars, check_mostar_double_star, {"max_n": 10}),
    Claim("C20b", "mostar_star_like_remark", "Mo(T) = Mo(L(T)) + m l (m - 1) for m legs of length l", "star-like Mostar remark", R,
          corpus_star_like, check_star_like_remark, {"max_l": 5, "max_m": 6},
          reason="Stated as a remark without proof."),
    Claim("C21", "gn_conditional_bounds", "conditional M2 and Pi2 upper bounds with extremal K_n (odd n) or CP_n (even n)",
          "conditional Zagreb bounds", R, corpus_connected, check_gn_conditional, {"graph_max_n": 7, "min_n": 3},
          reason="The family G_n is never defined; all connected graphs meeting the stated hypotheses are used."),
    Claim("C22", "cyclic_lower", "M1, M2 >= 4n, Pi1c >= 2^(cn), Pi2 >= 4^n, equality iff C_n", "Zagreb lower bounds", R,
          corpus_connected, check_cyclic_lower, {"graph_max_n": 7, "min_n": 3},
          reason="The family is not defined; the bounds are checked on connected graphs with minimum degree at least 2."),
    Claim("C23", "iag_family", "I_AG bounds for trees, unicyclic and bicyclic graphs", "AG-irregularity corollaries", R,
          corpus_iag, check_iag, {"tree_max_n": 9, "graph_max_n": 7},
          reason="I_AG is reconstructed as 1 - n^n prod(d_i + r)/(2m + rn)^n; the source never defines it explicitly."),
    Claim("C24", "am_gm_regular", "n^n prod(d_i + r) / (2m + rn)^n <= 1, equality iff regular", "AM-GM inequality", V,
          corpus_degree_graphs, check_am_gm, {"graph_max_n": 6, "random": 100, "key": "C24"}),
    Claim("C25", "eag_regular", "EAG(G) >= m e, equality iff every edge is degree-balanced", "exponential AG index", V,
          corpus_degree_graphs, check_eag, {"graph_max_n": 6, "random": 100, "key": "C25"}),
    Claim("C26", "majorization_chain", "D majorized by D' is joined by a chain of single +1/-1 moves",
          "majorization chain proposition", V, corpus_majorization, check_majorization, {"max_n": 8}),
    Claim("C27", "prufer_bijection", "labeled trees with degree sequence D number (n-2)!/prod(d_i - 1)!",
          "Prufer correspondence", V, corpus_prufer, check_prufer, {"max_n": 8}),
    Claim("C28", "giant_component_threshold", "Q > 0 gives a giant component, Q < 0 only small ones",
          "configuration-model threshold", V, corpus_giant, check_giant, {"n": 2000, "trials": 20}),
    Claim("C28b", "giant_component_boundary", "behaviour at Q = 0", "configuration-model threshold, boundary", R,
          corpus_giant_boundary, check_giant_boundary, {"n": 2000, "trials": 20},
          reason="The threshold statement says nothing at Q = 0; the median is recorded only."),
    Claim("C29", "clt_randic", "standardised Randic index and edge count are close to normal, mean near the asymptotic value",
          "central limit theorem for degree-based indices", V, corpus_clt, check_clt,
          {"n": 200, "p": 0.5, "samples": 500}),
]

REGISTRY: dict[str, Claim] = {c.id: c for c in CLAIMS}


# Running ----------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 20240601
    claims: tuple[str, ...] = ()
    overrides: dict = field(default_factory=dict)

    def claim_ids(self) -> list[str]:
        ids = list(self.claims) if self.claims else [c.id for c in CLAIMS]
        for cid in ids:
            if cid not in REGISTRY:
                raise KeyError(f"unknown claim id {cid!r}")
        return ids

    def budget(self, cid: str) -> dict:
        claim = REGISTRY[cid]
        extra = dict(self.overrides.get(cid, {}))
        unknown = set(extra) - set(claim.defaults)
        if unknown:
            raise KeyError(f"claim {cid} has no budget keys {sorted(unknown)}")
        cfg = dict(claim.defaults)
        cfg.update(extra)
        return cfg

    def to_dict(self) -> dict:
        return {"seed": self.seed, "claims": self.claim_ids(), "overrides": self.overrides}


def load_config(path) -> SuiteConfig:
    with open(path) as fh:
        data = json.load(fh)
    claims = data.get("claims", "all")
    return SuiteConfig(
        seed=int(data.get("seed", SuiteConfig.seed)),
        claims=() if claims == "all" else tuple(claims),
        overrides={k: dict(v) for k, v in data.get("overrides", {}).items()},
    )


def _params_dict(it: Item) -> dict:
    return {k: list(v) if isinstance(v, tuple) else v for k, v in it.params}


def check_items(claim: Claim, items: Iterable[Item]) -> ClaimReport:
    start = time.perf_counter()
    violations: list[Violation] = []
    violation_count = equality_count = checks = size = 0
    witnesses: list[str] = []
    for it in items:
        size += 1
        outcomes = claim.check(it)
        checks += len(outcomes)
        eq_here = any(o.equality for o in outcomes if not o.label.startswith("equality"))
        if eq_here:
            equality_count += 1
            if len(witnesses) < MAX_RECORDED_EQUALITIES:
                witnesses.append(it.fingerprint)
        for o in outcomes:
            if not o.holds:
                violation_count += 1
                if len(violations) < MAX_RECORDED_VIOLATIONS:
                    violations.append(Violation(it.fingerprint, _params_dict(it), o.label, o.lhs, o.rhs))
    return ClaimReport(
        claim.id,
        claim.name,
        claim.status,
        size,
        checks,
        violation_count,
        violations,
        equality_count,
        witnesses,
        time.perf_counter() - start,
    )


def check_claim(cid: str, config: SuiteConfig | None = None) -> ClaimReport:
    config = config or SuiteConfig()
    if cid not in REGISTRY:
        raise KeyError(f"unknown claim id {cid!r}")
    claim = REGISTRY[cid]
    start = time.perf_counter()
    try:
        items = claim.corpus(config.budget(cid), config.seed)
        report = check_items(claim, items)
    except GraphError as exc:
        report = ClaimReport(cid, claim.name, claim.status, 0, 0, 0, [], 0, [], error=str(exc))
    report.runtime = time.perf_counter() - start
    return report


def _run_one(args) -> ClaimReport:
    cid, config = args
    return check_claim(cid, config)


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("TOPOINDEX_THREADS", "1")))
    except ValueError:
        return 1


def run_suite(config: SuiteConfig | None = None, workers: int | None = None) -> list[ClaimReport]:
    config = config or SuiteConfig()
    ids = config.claim_ids()
    workers = default_workers() if workers is None else workers
    if workers > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            reports = list(ex.map(_run_one, [(cid, config) for cid in ids]))
    else:
        reports = [check_claim(cid, config) for cid in ids]
    return sorted(reports, key=lambda r: ids.index(r.claim_id))


def replay(cid: str, fingerprint: str, params: dict | None = None) -> list[Outcome]:
    """Re-run one claim on a single item, for example a recorded violation."""
    if cid not in REGISTRY:
        raise KeyError(f"unknown claim id {cid!r}")
    p = {k: tuple(v) if isinstance(v, list) else v for k, v in (params or {}).items()}
    return REGISTRY[cid].check(item(fingerprint, **p))


def suite_exit_code(reports: list[ClaimReport]) -> int:
    return 2 if any(r.failed for r in reports) else 0


def reports_to_json(reports: list[ClaimReport], config: SuiteConfig) -> str:
    """Deterministic JSON; runtimes are left out so reruns are byte-identical."""
    doc = {
        "config": config.to_dict(),
        "claims": [r.to_dict() for r in reports],
        "summary": {
            "verified_failures": [r.claim_id for r in reports if r.failed],
            "report_only_with_violations": [
                r.claim_id for r in reports if r.status is Status.REPORT_ONLY and r.violation_count
            ],
            "exit_code": suite_exit_code(reports),
        },
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


CSV_FIELDS = ["id", "name", "status", "verdict", "corpus_size", "checks", "violation_count", "equality_count"]


def reports_to_csv(reports: list[ClaimReport]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in reports:
        d = r.to_dict()
        w.writerow({k: d[k] for k in CSV_FIELDS})
    return buf.getvalue()
