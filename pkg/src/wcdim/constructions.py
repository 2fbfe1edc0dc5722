"""Witness graphs and constructions with characteristic-dependent dimension.

Vertex names follow the usual drawings of these graphs: ``v1..v7`` for the
order-7 witness, ``u``, ``w``, ``v1..v4`` for the six-vertex gadget, and
``y_i``, ``u_i``, ``v1``, ``v2``, ``w1``, ``w2`` for the two-clique family.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from wcdim.graph import Graph, bits_of, inflate_vertex, to_graph6
from wcdim.linalg import is_prime
from wcdim.mis import maximal_independent_sets

__all__ = [
    "NamedGraph",
    "g7",
    "g8",
    "g10",
    "g_k2",
    "h_of",
    "gn_family",
    "gn_expected_mis",
    "graph_for_prime",
    "named_inflate",
]


@dataclass(frozen=True)
class NamedGraph:
    graph: Graph
    labels: dict[str, int]

    def __post_init__(self):
        if sorted(self.labels.values()) != list(range(self.graph.order)):
            raise ValueError("labels must be a bijection onto the vertex set")

    def __getitem__(self, name: str) -> int:
        return self.labels[name]

    def names(self) -> list[str]:
        inv = {i: name for name, i in self.labels.items()}
        return [inv[i] for i in range(self.graph.order)]

    def vertex_set(self, *names: str) -> int:
        m = 0
        for name in names:
            m |= 1 << self.labels[name]
        return m

    def to_json(self) -> str:
        return json.dumps({"graph6": to_graph6(self.graph), "labels": self.labels})


def _from_names(names: list[str], edges: list[tuple[str, str]]) -> NamedGraph:
    labels = {name: i for i, name in enumerate(names)}
    g = Graph.from_edges(len(names), [(labels[a], labels[b]) for a, b in edges])
    return NamedGraph(g, labels)


def _numbered(n: int, edges: str) -> NamedGraph:
    names = [f"v{i}" for i in range(1, n + 1)]
    pairs = [tuple(f"v{x}" for x in e.split("-")) for e in edges.split()]
    return _from_names(names, pairs)


# Edge lists transcribed from the drawings of the three witnesses; the
# dimension values they must reproduce are pinned in the test suite.

def g7() -> NamedGraph:
    """Order 7; dimension 2, or 3 in characteristic 2."""
    return _numbered(7, "1-6 6-2 6-7 2-4 1-3 3-7 7-4 1-5 2-5 3-5 4-5")


def g8() -> NamedGraph:
    """Order 8; dimension 1, or 2 in characteristic 3.

    The near-miss with ``v3v4`` and ``v2v6`` in place of ``v2v4`` has
    dimension 3 and depends on characteristic 2 instead.  This is the only
    graph of order 8 with critical prime 3.
    """
    return _numbered(8, "3-1 3-2 2-4 5-1 5-2 5-4 6-4 6-3 7-2 7-4 7-5 1-8 6-8 7-8")


def g10() -> NamedGraph:
    """Order 10; dimension 0, or 1 in characteristic 5."""
    return _numbered(
        10, "1-3 2-3 1-4 3-5 4-5 2-6 5-6 4-7 6-7 4-8 2-9 7-9 8-9 1-10 2-10 8-10"
    )


_GK2_NAMES = ["v1", "v2", "v3", "v4", "u", "w"]
_GK2_EDGES = [("v1", "u"), ("u", "v2"), ("u", "w"), ("v2", "v4"), ("v1", "v3"), ("v3", "w"), ("w", "v4")]


def g_k2() -> NamedGraph:
    return _from_names(_GK2_NAMES, _GK2_EDGES)


def h_of(g: Graph) -> NamedGraph:
    """Disjoint union of the gadget and ``g``, plus every edge ``v_i x`` (i = 1..4).

    Gadget vertices come first (``v1..v4, u, w``), then the vertices of ``g``
    named ``x1..xm`` in their original order.  Adds 1 to the dimension, or 2
    in characteristic 2.
    """
    if g.order < 1:
        raise ValueError("h_of needs a graph with at least one vertex")
    names = _GK2_NAMES + [f"x{i}" for i in range(1, g.order + 1)]
    edges = list(_GK2_EDGES)
    edges += [(f"x{a + 1}", f"x{b + 1}") for a, b in g.edges()]
    edges += [(vi, f"x{i}") for vi in ("v1", "v2", "v3", "v4") for i in range(1, g.order + 1)]
    return _from_names(names, edges)


def _gn_names(n: int) -> list[str]:
    return (
        [f"y{i}" for i in range(1, n + 1)]
        + [f"u{i}" for i in range(1, n + 1)]
        + ["v1", "v2", "w1", "w2"]
    )


def gn_expected_mis(named: NamedGraph, n: int) -> set[int]:
    """The ``2n + 4`` maximal independent sets the two-clique family must have."""
    us = [f"u{i}" for i in range(1, n + 1)]
    out = set()
    for i in range(1, n + 1):
        out.add(named.vertex_set(f"y{i}", "w1", "w2"))
        out.add(named.vertex_set(f"y{i}", f"u{i}"))
    out.add(named.vertex_set("v1", "w2"))
    out.add(named.vertex_set("v2", "w1"))
    out.add(named.vertex_set("v1", *us))
    out.add(named.vertex_set("v2", *us))
    return out


def gn_family(n: int) -> NamedGraph:
    """Graph on ``2n + 4`` vertices whose dimension is 1, or 2 when the
    characteristic divides ``2n - 1``.

    A clique on ``y1..yn, v1, v2`` and a complete bipartite graph with parts
    ``{w1, w2}`` and ``{u1..un}``, joined by ``v1w1``, ``v2w2`` and ``y_i u_j``
    for every ``i != j``.
    """
    if n < 2:
        raise ValueError(f"the family starts at n = 2, got {n}")
    ys = [f"y{i}" for i in range(1, n + 1)]
    us = [f"u{i}" for i in range(1, n + 1)]
    clique = ys + ["v1", "v2"]
    edges = [(a, b) for i, a in enumerate(clique) for b in clique[i + 1:]]
    edges += [(w, u) for w in ("w1", "w2") for u in us]
    edges += [("v1", "w1"), ("v2", "w2")]
    edges += [(f"y{i}", f"u{j}") for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    named = _from_names(_gn_names(n), edges)
    found = set(maximal_independent_sets(named.graph).sets)
    if found != gn_expected_mis(named, n):
        raise AssertionError(f"two-clique family for n={n} has unexpected independent sets")
    return named


def named_inflate(named: NamedGraph, name: str, k: int) -> NamedGraph:
    """Inflate the vertex called ``name`` into a clique of size ``k``.

    The new clique vertices are named ``name#2 .. name#k``.
    """
    v = named.labels[name]
    base = named.graph.order
    g = inflate_vertex(named.graph, v, k)
    labels = dict(named.labels)
    for i in range(k - 1):
        labels[f"{name}#{i + 2}"] = base + i
    return NamedGraph(g, labels)


def graph_for_prime(p: int, target_order: int) -> NamedGraph:
    """A graph of exactly ``target_order`` vertices whose dimension over GF(p)
    differs from the rational one (requires ``target_order >= p + 5``)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if target_order < p + 5:
        raise ValueError(f"order must be at least p + 5 = {p + 5}, got {target_order}")
    seed = g7() if p == 2 else gn_family((p + 1) // 2)
    extra = target_order - seed.graph.order
    if extra == 0:
        return seed
    return named_inflate(seed, "v2", extra + 1)


def mis_names(named: NamedGraph, mask: int) -> list[str]:
    names = named.names()
    return [names[v] for v in bits_of(mask)]
