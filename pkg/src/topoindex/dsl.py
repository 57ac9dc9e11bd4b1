"""A small text language naming graphs, used for fingerprints and the CLI.

Grammar: ``base[|op]...`` where ``base`` is one of

    path:N  cycle:N  star:N  complete:N  kpartite:A,B,..  doublestar:N
    starlike:L1,L2,..  greedy:D1,D2,..  cat:D1,K  petersen
    edges:N:u-v,u-v,..  tree:n=N,seed=S  rcg:n=N,extra=E,seed=S

and ``op`` is ``sub`` (subdivision), ``line`` (line graph), ``comp``
(complement) or ``thorn:P1,P2,..`` (pendant counts per vertex).
"""

from __future__ import annotations

import numpy as np

from . import generators as gen
from .graph import Graph, GraphError, from_edge_list


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _kv(text: str) -> dict[str, int]:
    out = {}
    for part in text.split(","):
        k, _, v = part.partition("=")
        if not v:
            raise GraphError(f"expected key=value, got {part!r}")
        out[k.strip()] = int(v)
    return out


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(int(seed))))


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree from a random Prufer code."""
    if n < 1:
        raise GraphError("random_tree needs n >= 1")
    if n <= 2:
        return gen.path(n)
    from .enumeration import prufer_decode

    code = _rng(seed).integers(0, n, size=n - 2)
    return prufer_decode([int(x) for x in code], n)


def random_connected(n: int, extra: int, seed: int) -> Graph:
    """Random tree plus ``extra`` distinct random chords (fewer if the graph fills up)."""
    t = random_tree(n, seed)
    if extra <= 0:
        return t
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if not t.has_edge(u, v)]
    k = min(extra, len(missing))
    pick = _rng(seed + 1).choice(len(missing), size=k, replace=False) if k else []
    return from_edge_list(list(t.edges) + [missing[i] for i in sorted(pick)], n)


def _base(text: str) -> Graph:
    name, _, arg = text.partition(":")
    name = name.strip().lower()
    if name == "path":
        return gen.path(int(arg))
    if name == "cycle":
        return gen.cycle(int(arg))
    if name == "star":
        return gen.star(int(arg))
    if name == "complete":
        return gen.complete(int(arg))
    if name == "kpartite":
        return gen.complete_multipartite(_ints(arg))
    if name == "doublestar":
        return gen.double_star(int(arg))
    if name == "starlike":
        return gen.star_like(*_ints(arg))
    if name == "greedy":
        return gen.greedy_tree(_ints(arg)).graph
    if name == "cat":
        d1, k = _ints(arg)
        return gen.caterpillar(d1, k).graph
    if name == "petersen":
        return gen.petersen()
    if name == "edges":
        n_text, _, pairs = arg.partition(":")
        edges = []
        for p in pairs.split(","):
            if p:
                u, v = p.split("-")
                edges.append((int(u), int(v)))
        return from_edge_list(edges, int(n_text))
    if name == "tree":
        kv = _kv(arg)
        return random_tree(kv["n"], kv["seed"])
    if name == "rcg":
        kv = _kv(arg)
        return random_connected(kv["n"], kv.get("extra", 0), kv["seed"])
    raise GraphError(f"unknown graph family {name!r} in {text!r}")


def parse_graph_spec(text: str) -> Graph:
    parts = text.strip().split("|")
    g = _base(parts[0])
    for op in parts[1:]:
        name, _, arg = op.partition(":")
        if name == "sub":
            g = gen.subdivision(g)
        elif name == "line":
            g = gen.line_graph(g)
        elif name == "comp":
            g = g.complement()
        elif name == "thorn":
            g = gen.thorny(gen.ThornSpec(g, _ints(arg)))
        else:
            raise GraphError(f"unknown graph operation {name!r} in {text!r}")
    return g


def edges_spec(g: Graph) -> str:
    """Explicit fingerprint that reproduces ``g`` exactly."""
    return f"edges:{g.n}:" + ",".join(f"{u}-{v}" for u, v in g.edges)


def thorn_spec(base: str, p) -> str:
    return f"{base}|thorn:" + ",".join(str(int(x)) for x in p)
