from __future__ import annotations

import networkx as nx
from hypothesis import strategies as st

from topoindex.graph import Graph, from_edge_list

ACCEPTANCE_LINES: dict[int, str] = {}


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # thread a random spanning tree through the vertices first
        order = draw(st.permutations(range(n)))
        tree = []
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            tree.append(tuple(sorted((order[i], order[j]))))
        chosen = sorted(set(chosen) | set(tree))
    return from_edge_list(chosen, n)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
