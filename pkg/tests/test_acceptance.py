"""Acceptance gate: one test per criterion, each printing a single PASS/FAIL line.

Criterion 1 compares against published table values some of which no graph can
produce; those assertions are left to fail.
"""

from __future__ import annotations

import time

import pytest

from conftest import ACCEPTANCE_LINES
from topoindex import harness
from topoindex.degree_indices import degree_index, total_irregularity, total_irregularity_bound
from topoindex.enumeration import all_graphs
from topoindex.generators import greedy_tree
from topoindex.harness import Status, SuiteConfig, check_claim, reports_to_json, run_suite
from topoindex.random_models import HeterogeneousModel, clt_experiment, giant_component_experiment, parse_profile

TABLE1_DEGREES = (4, 4, 3, 3, 3, 3, 3, 2) + (1,) * 11


def record(num: int, title: str, problems: list[str], detail: str = "") -> None:
    verdict = "PASS" if not problems else "FAIL"
    line = f"[{verdict}] criterion {num:2d}: {title}"
    if detail:
        line += f" ({detail})"
    if problems:
        line += " -- " + "; ".join(problems)
    ACCEPTANCE_LINES[num] = line
    print(line)
    assert not problems, line


def claim_problems(rep) -> list[str]:
    out = []
    if rep.error:
        out.append(f"{rep.claim_id} error: {rep.error}")
    if rep.violation_count:
        first = rep.violations[0]
        out.append(f"{rep.claim_id}: {rep.violation_count} violations, e.g. {first.label} on {first.fingerprint}")
    return out


@pytest.fixture(scope="module")
def full_suite():
    cfg = SuiteConfig()
    reports = run_suite(cfg, workers=1)
    return cfg, reports, reports_to_json(reports, cfg)


def test_criterion_01_table1():
    start = time.perf_counter()
    g = greedy_tree(TABLE1_DEGREES).graph
    exact = {"F": 282, "M2": 103, "NK": 7776, "D1": 60466176, "D2": 14660155008, "D1*": 928972800000}
    approx = {"mM2": 3.424, "SCI": 8.515, "SDD": 51.917}
    problems = []
    for k, v in exact.items():
        got = degree_index(g, k)
        if got != v:
            problems.append(f"{k} = {got}, expected {v}")
    for k, v in approx.items():
        got = degree_index(g, k)
        if abs(got - v) > 1e-3:
            problems.append(f"{k} = {got:.4f}, expected {v} +/- 0.001")
    elapsed = time.perf_counter() - start
    if elapsed >= 1.0:
        problems.append(f"runtime {elapsed:.2f}s >= 1s")
    record(1, "Table 1 indices on the greedy tree", problems, f"{elapsed * 1000:.0f} ms")


def test_criterion_02_greedy_layers():
    layers = greedy_tree(TABLE1_DEGREES).layers
    record(2, "greedy-tree layer sizes (1,4,9,5)", [] if layers == (1, 4, 9, 5) else [f"layers {layers}"])


def test_criterion_03_thorny_identity():
    start = time.perf_counter()
    reps = [check_claim(c) for c in ("C2", "C3", "C4")]
    elapsed = time.perf_counter() - start
    problems = [p for r in reps for p in claim_problems(r)]
    sizes = {r.claim_id: r.corpus_size for r in reps}
    if sizes != {"C2": 200, "C3": 50, "C4": 50}:
        problems.append(f"corpus sizes {sizes}")
    if elapsed >= 10:
        problems.append(f"runtime {elapsed:.1f}s >= 10s")
    record(3, "thorny Sombor identity and corollaries at 1e-9", problems, f"{elapsed:.2f}s")


def test_criterion_04_sombor_sandwich():
    rep = check_claim("C1")
    problems = claim_problems(rep)
    if rep.corpus_size != 1200:  # 200 unlabeled trees on 2..10 vertices plus 1000 random graphs
        problems.append(f"corpus size {rep.corpus_size}")
    record(4, "M1/sqrt2 <= SO < M1", problems, f"{rep.corpus_size} graphs")


def test_criterion_05_wiener_szeged():
    rep = check_claim("C10")
    problems = claim_problems(rep)
    record(5, "W = Sz on trees, W <= Sz on random graphs", problems, f"{rep.corpus_size} graphs")


def test_criterion_06_general_gutman():
    reps = [check_claim("C7"), check_claim("C8")]
    problems = [p for r in reps for p in claim_problems(r)]
    if reps[1].corpus_size != 500:
        problems.append(f"{reps[1].corpus_size} edge-addition trials")
    record(6, "general Gutman bound with equality at K_n; edge addition decreases", problems)


def test_criterion_07_spectral():
    reps = [check_claim(c) for c in ("C16", "C17", "C18", "C16e", "C16w")]
    problems = [p for r in reps for p in claim_problems(r)]
    record(7, "spectral identities", problems)


def test_criterion_08_hf_extremal():
    start = time.perf_counter()
    rep = check_claim("C14")
    elapsed = time.perf_counter() - start
    problems = claim_problems(rep)
    if elapsed >= 300:
        problems.append(f"runtime {elapsed:.0f}s >= 300s")
    record(8, "Hf extremal values and witnesses over tree classes", problems, f"{rep.corpus_size} searches, {elapsed:.1f}s")


def test_criterion_09_lz_corollaries():
    rep = check_claim("C15")
    record(9, "Lz lower bounds over chemical trees n=14", claim_problems(rep))


def test_criterion_10_sum_of_squares_window():
    rep = check_claim("C19")
    record(10, "f(n,m) window for n <= 6", claim_problems(rep), f"{rep.corpus_size} (n,m) pairs")


def test_criterion_11_configuration_model():
    start = time.perf_counter()
    hi = giant_component_experiment(parse_profile("1:0.5,3:0.5"), 2000, 20, seed=7)
    lo = giant_component_experiment(parse_profile("1:0.8,3:0.2"), 2000, 20, seed=7)
    elapsed = time.perf_counter() - start
    problems = []
    if not hi.median > 0.2:
        problems.append(f"Q=1 median {hi.median}")
    if not lo.median < 0.05:
        problems.append(f"Q=-0.2 median {lo.median}")
    if elapsed >= 30:
        problems.append(f"runtime {elapsed:.1f}s >= 30s")
    record(11, "giant component threshold", problems, f"medians {hi.median:.4f} / {lo.median:.4f}, {elapsed:.2f}s")


def test_criterion_12_clt():
    rep = clt_experiment(HeterogeneousModel.uniform(200, 0.5), "randic:-0.5", 500, seed=7)
    problems = []
    if not abs(rep.skewness) < 0.2:
        problems.append(f"skewness {rep.skewness}")
    if not abs(rep.excess_kurtosis) < 0.5:
        problems.append(f"excess kurtosis {rep.excess_kurtosis}")
    if not rep.cdf_gap < 0.08:
        problems.append(f"cdf gap {rep.cdf_gap}")
    if not rep.mean_relative_error < 0.05:
        problems.append(f"mean error {rep.mean_relative_error}")
    detail = f"skew {rep.skewness:.3f}, exkurt {rep.excess_kurtosis:.3f}, gap {rep.cdf_gap:.3f}, mean err {rep.mean_relative_error:.4f}"
    record(12, "CLT for the Randic index", problems, detail)


def test_criterion_13_report_only_violation(full_suite):
    _, reports, _ = full_suite
    c6 = next(r for r in reports if r.claim_id == "C6")
    problems = []
    if c6.status is not Status.REPORT_ONLY:
        problems.append("C6 is not report-only")
    if not any(v.fingerprint.startswith("cycle:3") for v in c6.violations):
        problems.append("no violation recorded on C3")
    code = harness.suite_exit_code(reports)
    if code != 0:
        problems.append(f"suite exit code {code}: {[r.claim_id for r in reports if r.failed]}")
    record(13, "report-only violation recorded, suite exits 0", problems, f"{c6.violation_count} C6 violations")


def test_criterion_14_irr_t_maximum():
    problems = []
    maxima = {}
    for n in (5, 7):
        best = max(total_irregularity(g.degrees) for g in all_graphs(n))
        bound = total_irregularity_bound(n)
        maxima[n] = best
        if best > bound:
            problems.append(f"n={n}: max {best} exceeds {bound}")
        if best != bound:
            problems.append(f"n={n}: max {best} differs from closed form {bound}")
    if maxima.get(5) != 14:
        problems.append(f"n=5 maximum {maxima.get(5)} != 14")
    record(14, "irr_t maximum equals the closed form", problems, f"n=5: {maxima[5]}, n=7: {maxima[7]}")


def test_criterion_15_determinism(full_suite):
    cfg, _, first = full_suite
    second = reports_to_json(run_suite(cfg, workers=1), cfg)
    record(15, "byte-identical suite JSON on rerun", [] if first == second else ["reports differ"], f"{len(first)} bytes")
