from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, to_nx
from topoindex.generators import (
    ThornSpec,
    balanced_parts,
    bfs_layers,
    caterpillar,
    complete,
    complete_multipartite,
    cycle,
    double_star,
    greedy_tree,
    line_graph,
    path,
    petersen,
    star,
    star_like,
    subdivision,
    thorny,
)
from topoindex.graph import GraphError, is_tree

TABLE1_DEGREES = (4, 4, 3, 3, 3, 3, 3, 2) + (1,) * 11


def test_family_sizes():
    assert (path(5).m, cycle(5).m, star(5).m, complete(5).m) == (4, 5, 4, 10)
    assert star(5).degree(0) == 4
    assert double_star(3).degrees[:2] == (4, 4)
    assert star_like(2, 2, 1).n == 6


def test_petersen_is_petersen():
    assert nx.is_isomorphic(to_nx(petersen()), nx.petersen_graph())


@pytest.mark.parametrize("parts", [[1, 3], [2, 2, 2], [3, 1, 2]])
def test_complete_multipartite_matches_networkx(parts):
    assert nx.is_isomorphic(to_nx(complete_multipartite(parts)), nx.complete_multipartite_graph(*parts))


def test_balanced_parts():
    assert sorted(balanced_parts(7, 3)) == [2, 2, 3]
    assert sum(balanced_parts(10, 4)) == 10


def test_greedy_tree_layers():
    gt = greedy_tree(TABLE1_DEGREES)
    assert gt.layers == (1, 4, 9, 5)
    assert is_tree(gt.graph) and sorted(gt.graph.degrees, reverse=True) == list(TABLE1_DEGREES)
    assert bfs_layers(gt.graph) == gt.layers


def test_greedy_tree_rejects_infeasible():
    with pytest.raises(GraphError):
        greedy_tree([2, 2, 2])


@given(st.lists(st.integers(1, 5), min_size=2, max_size=14))
def test_greedy_tree_realizes_feasible_sequences(ds):
    need = 2 * (len(ds) - 1) - sum(ds)
    if need != 0:
        return
    g = greedy_tree(ds).graph
    assert is_tree(g) and sorted(g.degrees) == sorted(ds)


def test_caterpillar_shape():
    c = caterpillar(3, 2)
    assert c.graph.n == 12 and is_tree(c.graph)
    assert [c.graph.degree(v) for v in c.spine] == [3, 4, 4, 3]
    with pytest.raises(GraphError):
        caterpillar(3, 2, n=100)


def test_thorny_counts():
    g = thorny(ThornSpec(cycle(4), (1, 0, 2, 0)))
    assert g.n == 7 and g.m == 7
    assert g.degrees[:4] == (3, 2, 4, 2)
    with pytest.raises(GraphError):
        ThornSpec(cycle(4), (1, 0))


@given(graphs(max_n=7))
@settings(max_examples=50)
def test_subdivision_matches_networkx(g):
    s = subdivision(g)
    assert s.n == g.n + g.m and s.m == 2 * g.m
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    for i, (u, v) in enumerate(g.edges):
        ref.add_edges_from([(u, ("e", i)), (("e", i), v)])
    assert nx.is_isomorphic(to_nx(s), ref)


@given(graphs(max_n=7))
@settings(max_examples=50)
def test_line_graph_matches_networkx(g):
    assert nx.is_isomorphic(to_nx(line_graph(g)), nx.line_graph(to_nx(g)))
