from __future__ import annotations

import itertools
import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, to_nx
from topoindex.enumeration import (
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
    parse_tree_class,
    prufer_decode,
    prufer_encode,
    tree_degree_sequences,
    trees_with_degree_sequence,
)
from topoindex.generators import complete, cycle, path, petersen, star, star_like
from topoindex.graph import GraphError, canonical_tree_code, is_tree

# unlabeled tree counts, OEIS A000055
A000055 = [1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]


@pytest.mark.parametrize("n", range(1, 11))
def test_tree_counts_match_networkx(n):
    ours = {canonical_tree_code(t) for t in all_trees(n)}
    assert len(ours) == len(list(all_trees(n))) == A000055[n]
    if n >= 2:
        ref = {canonical_tree_code(_from_nx(t)) for t in nx.nonisomorphic_trees(n)}
        assert ours == ref


def _from_nx(h):
    from topoindex.graph import from_edge_list

    return from_edge_list(list(h.edges), h.number_of_nodes())


def test_tree_limit():
    with pytest.raises(GraphError):
        list(all_trees(13))


def test_chemical_trees_have_max_degree_four():
    ts = list(chemical_trees(9))
    assert all(max(t.degrees) <= 4 for t in ts)
    assert len(ts) == sum(1 for t in all_trees(9) if max(t.degrees) <= 4)


@given(st.integers(3, 12).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))))
def test_prufer_round_trip(args):
    n, code = args
    t = prufer_decode(code, n)
    assert is_tree(t) and list(prufer_encode(t)) == code
    for v in range(n):
        assert t.degree(v) == code.count(v) + 1


@pytest.mark.parametrize("n", range(2, 7))
def test_labeled_counts_against_all_codes(n):
    seen: dict[tuple, int] = {}
    for code in itertools.product(range(n), repeat=n - 2):
        t = prufer_decode(list(code), n)
        seen[t.degrees] = seen.get(t.degrees, 0) + 1
    for d in tree_degree_sequences(n):
        assert labeled_tree_count(d) == seen[tuple(d)]
        assert len(list(trees_with_degree_sequence(d, labeled=True))) == seen[tuple(d)]


def test_cayley_total():
    for n in range(2, 9):
        assert sum(labeled_tree_count(d) * math.factorial(n) // _perm_fix(d) for d in tree_degree_sequences(n)) == n ** (n - 2)


def _perm_fix(d):
    out = 1
    for k in set(d):
        out *= math.factorial(list(d).count(k))
    return out


def test_degree_sequence_examples():
    assert len(list(trees_with_degree_sequence((2, 2, 1, 1), labeled=True))) == 2
    assert len(list(trees_with_degree_sequence((2, 2, 1, 1)))) == 1
    assert len(list(trees_with_degree_sequence((3, 2, 2, 1, 1, 1)))) == 2


def test_classify_examples():
    assert tuple(classify(path(6))[:4]) == (2, 1, 0, True)
    assert tuple(classify(star(5))[:4]) == (4, 4, 1, False)
    assert tuple(classify(star_like(2, 2, 2))[:3]) == (3, 3, 1)


def test_tree_class_parsing():
    c = parse_tree_class("BT:2:chem")
    assert c.param == 2 and c.chemical and c.label(9) == "BT_{9,2}"
    assert parse_tree_class("MT").label(8) == "MT_8"
    with pytest.raises(KeyError):
        parse_tree_class("XX:1")


def test_majorization():
    a, b = (2, 2, 2, 1, 1), (4, 1, 1, 1, 1)
    assert majorizes(a, b) and not majorizes(b, a)
    chain = majorization_chain(a, b)
    assert chain[0] == a and chain[-1] == b
    for x, y in zip(chain, chain[1:]):
        assert sum(abs(p - q) for p, q in zip(x, y)) == 2
    with pytest.raises(GraphError):
        majorization_chain(b, a)
    with pytest.raises(GraphError):
        majorizes((1, 1), (1, 1, 1))


def _chromatic_brute(g):
    for k in range(1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n):
            if all(col[u] != col[v] for u, v in g.edges):
                return k
    return 0


def test_chromatic_known():
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(complete(4)) == 4
    assert chromatic_number(petersen()) == 3


@given(graphs(min_n=1, max_n=6))
@settings(max_examples=40, deadline=None)
def test_chromatic_against_brute_force(g):
    assert chromatic_number(g) == _chromatic_brute(g)


def test_max_sum_squares_examples():
    assert max_sum_squares(4, 4) == 18
    assert max_sum_squares(4, 6) == 36
    assert max_sum_squares(5, 4) == 20


@pytest.mark.parametrize("n", range(2, 6))
def test_max_sum_squares_against_atlas(n):
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
    for m in range(n * (n - 1) // 2 + 1):
        ref = max(sum(d * d for _, d in g.degree()) for g in atlas if g.number_of_edges() == m)
        assert max_sum_squares(n, m) == ref


def test_all_graphs_counts():
    # unlabeled graphs and connected graphs, OEIS A000088 / A001349
    assert [len(all_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]
    assert [len(all_graphs(n, connected=True)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]


def test_extremal_examples():
    r = extremal_search(TreeClass("MT"), 8, "hf:x^2", "max")
    assert r.value == 32 and r.witnesses == ((4, 2, 2, 2, 1, 1, 1, 1),)
    r = extremal_search(TreeClass("BT", 2), 9, "hf:x^2", "min")
    assert r.value == 34 and r.witnesses == ((3, 3, 2, 2, 2, 1, 1, 1, 1),)
    with pytest.raises(GraphError, match="n/2 - 1"):
        extremal_search(TreeClass("BT", 4), 9, "hf:x^2")
    with pytest.raises(GraphError):
        extremal_search(TreeClass("MT"), 7, "hf:x^2")


def test_extremal_callable_objective():
    r = extremal_search(TreeClass("PT", 2), 6, lambda t: max(t.degrees), "max")
    assert r.value == 2 and r.class_size == 1
