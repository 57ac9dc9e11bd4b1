from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import graphs
from topoindex.degree_indices import (
    IndexKind,
    IndexParams,
    ag_irregularity,
    caterpillar_formula,
    degree_index,
    log_product,
    matching_formula_indices,
    total_irregularity,
    total_irregularity_bound,
    vertex_function,
)
from topoindex.enumeration import all_graphs
from topoindex.generators import complete, cycle, path, star
from topoindex.graph import GraphError

S4 = star(4)  # centre of degree 3, three leaves


@pytest.mark.parametrize(
    "kind, expected",
    [
        ("M1", 12),
        ("M2", 9),
        ("F", 30),
        ("SO", 3 * math.sqrt(10)),
        ("Randic", math.sqrt(3)),
        ("ABC", 3 * math.sqrt(2 / 3)),
        ("GA", 3 * math.sqrt(3) / 2),
        ("H", 1.5),
        ("SCI", 1.5),
        ("SDD", 10),
        ("ISI", 2.25),
        ("irr", 6),
        ("sigma", 12),
        ("irr_t", 6),
        ("NK", 3),
        ("D1", 9),
        ("D2", 27),
        ("D1*", 64),
        ("Pi2", 27),
        ("Lz", 3 * 3 * 0 + 3 * 1 * 2),
    ],
)
def test_star_values(kind, expected):
    assert degree_index(S4, kind) == pytest.approx(expected, rel=1e-12)


def test_path_values():
    p4 = path(4)
    assert degree_index(p4, "M1") == 10
    assert degree_index(p4, "M2") == 8
    assert degree_index(p4, "F") == 18
    assert degree_index(p4, "mM2") == pytest.approx(0.5 + 0.25 + 0.5)


def _reference(g, kind):
    deg = g.degrees
    e = [(deg[u], deg[v]) for u, v in g.edges]
    table = {
        "M1": lambda: sum(d**2 for d in deg),
        "M2": lambda: sum(a * b for a, b in e),
        "HM1": lambda: sum((a + b) ** 2 for a, b in e),
        "HM2": lambda: sum((a * b) ** 2 for a, b in e),
        "AG": lambda: sum((a + b) / 2 / math.sqrt(a * b) for a, b in e),
        "mSO": lambda: sum((a * a + b * b) ** -0.5 for a, b in e),
        "EAG": lambda: sum(math.exp((a + b) / 2 / math.sqrt(a * b)) for a, b in e),
        "irr_t": lambda: sum(abs(x - y) for i, x in enumerate(deg) for y in deg[i + 1 :]),
    }
    return table[kind]()


@given(graphs(min_n=2, max_n=9))
@settings(max_examples=60)
def test_against_direct_formulas(g):
    for kind in ("M1", "M2", "HM1", "HM2", "AG", "mSO", "EAG", "irr_t"):
        if g.min_degree == 0 and kind in ("AG", "mSO", "EAG"):
            continue
        assert degree_index(g, kind) == pytest.approx(_reference(g, kind), rel=1e-12)


@given(graphs(min_n=2, max_n=9))
@settings(max_examples=60)
def test_log_products_agree_with_exact(g):
    if g.min_degree == 0:
        return
    for kind in ("Pi2", "NK", "D1", "D2", "D1*"):
        exact = degree_index(g, kind)
        assert log_product(g, kind) == pytest.approx(math.log(exact), abs=1e-9)
    c = 2.5
    assert log_product(g, "Pi1c", IndexParams(c=c)) == pytest.approx(c * sum(math.log(d) for d in g.degrees))


def test_parametric_indices():
    g = cycle(5)
    assert degree_index(g, "SEI", IndexParams(a=2)) == 5 * 2 * 4
    with pytest.raises(GraphError):
        degree_index(g, "SEI")
    assert degree_index(g, "Randic", IndexParams(tau=1)) == 20
    assert degree_index(g, "Hf", IndexParams(f=vertex_function("x^2"))) == 20
    assert degree_index(complete(4), "IAG", IndexParams(r=1.0)) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(GraphError):
        degree_index(path(2), "AZI")


def test_var_and_sirr_use_average_degree():
    g = star(4)
    avg = 6 / 4
    assert degree_index(g, "Var") == pytest.approx(((3 - avg) ** 2 + 3 * (1 - avg) ** 2) / 4)
    assert degree_index(g, "Sirr") == pytest.approx(abs(3 - avg) + 3 * abs(1 - avg))


def test_index_kind_parse():
    assert IndexKind.parse("randic") is IndexKind.Randic
    assert IndexKind.parse("D1*") is IndexKind.D1star
    with pytest.raises(KeyError):
        IndexKind.parse("nope")


def test_total_irregularity_bound_is_attained_small():
    # exhaustive maxima over all graphs on n vertices
    for n in range(2, 7):
        best = max(total_irregularity(g.degrees) for g in all_graphs(n))
        assert Fraction(best) == total_irregularity_bound(n)


def test_ag_irregularity_zero_on_regular():
    assert ag_irregularity((3, 3, 3, 3)) == pytest.approx(0.0, abs=1e-12)
    assert ag_irregularity((3, 1, 1, 1)) > 0


def test_matching_formulas_hand_values():
    v = matching_formula_indices([3, 1, 2, 2])
    assert v["mM2"] == pytest.approx(1 / 3 + 1 / 4)
    assert (v["F"], v["M2"], v["NK"], v["D1"], v["D2"], v["D1*"]) == (18, 7, 12, 144, 12, 16)
    assert v["SCI"] == pytest.approx(1.0)
    assert v["SDD"] == pytest.approx(3 + 1 / 3 + 2)
    with pytest.raises(GraphError):
        matching_formula_indices([1, 2, 3])


def test_caterpillar_formula_known_values():
    # evaluated by hand from the closed forms at d1=3, k=98
    ga = 12 * math.sqrt(3) / 4 + 2 * 98 * 3 * 2 / 5 + 4 * math.sqrt(12) / 7
    x = 8 / math.sqrt(7) + 98 * 3 / math.sqrt(6) + 2 / 3
    assert caterpillar_formula("GA", 3, 98) == pytest.approx(ga)
    assert caterpillar_formula("X", 3, 98) == pytest.approx(x)
    assert caterpillar_formula("GA", 3, 98) == pytest.approx(242.3756, abs=1e-4)


def test_vertex_functions():
    assert vertex_function("xlnx")(1) == 0.0
    assert vertex_function("x^3")(2) == 8
    assert vertex_function("lz:10")(3) == 9 * 6
