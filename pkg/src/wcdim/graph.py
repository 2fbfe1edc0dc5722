"""Simple undirected graphs on vertices ``0..order-1`` stored as row bitsets.

Vertex sets are passed around either as iterables of vertex indices or as
integer bitmasks (bit ``v`` set means ``v`` is a member).  Every graph
returned by this module is immutable.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from wcdim import _backend

__all__ = [
    "Graph",
    "Graph6Error",
    "parse_graph6",
    "to_graph6",
    "complement",
    "contract_clique",
    "inflate_vertex",
    "induced_subgraph",
    "closed_neighborhoods_equal",
    "canonical_form",
    "bits_of",
    "mask_of",
]

#: Soft cap on the order.  Larger graphs still work through the pure Python
#: paths but the compiled kernels use 64-bit rows.
MAX_ORDER = 64
CANONICAL_MAX_ORDER = 8


def mask_of(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph:
    """An immutable simple graph.

    ``adj[v]`` is the bitmask of neighbours of ``v``.
    """

    __slots__ = ("_order", "_adj", "_hash")

    def __init__(self, order: int, adj: Iterable[int]):
        adj = tuple(adj)
        if order < 1:
            raise ValueError("graph order must be at least 1")
        if len(adj) != order:
            raise ValueError(f"expected {order} adjacency rows, got {len(adj)}")
        full = (1 << order) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside [0, {order})")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits_of(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")
        self._order = order
        self._adj = adj
        self._hash = None

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge {u}-{v} out of range for order {order}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, adj)

    @classmethod
    def empty(cls, order: int) -> "Graph":
        return cls(order, [0] * order)

    @classmethod
    def complete(cls, order: int) -> "Graph":
        full = (1 << order) - 1
        return cls(order, [full & ~(1 << v) for v in range(order)])

    @classmethod
    def path(cls, order: int) -> "Graph":
        return cls.from_edges(order, [(i, i + 1) for i in range(order - 1)])

    @classmethod
    def cycle(cls, order: int) -> "Graph":
        if order < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(order, [(i, (i + 1) % order) for i in range(order)])

    @property
    def order(self) -> int:
        return self._order

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    def vertices(self) -> range:
        return range(self._order)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits_of(self._adj[v])

    def closed_neighborhood(self, v: int) -> int:
        return self._adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self._order):
            for v in bits_of(self._adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def is_clique(self, vertices: Iterable[int] | int) -> bool:
        m = mask_of(vertices)
        return all(self._adj[v] | (1 << v) | ~m == -1 for v in bits_of(m))

    def is_independent(self, vertices: Iterable[int] | int) -> bool:
        m = mask_of(vertices)
        return all(not self._adj[v] & m for v in bits_of(m))

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self._order
        for u, v in self.edges():
            adj[perm[u]] |= 1 << perm[v]
            adj[perm[v]] |= 1 << perm[u]
        return Graph(self._order, adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._order, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, edges={list(self.edges())})"


# -- graph6 -----------------------------------------------------------------


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _decode_order(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    for i, b in enumerate(data[:8]):
        if not 63 <= b <= 126:
            raise Graph6Error(f"character {b!r} outside the graph6 range 63..126", i)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte order prefix", len(data))
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte order prefix", len(data))
    n = 0
    for b in data[1:4]:
        n = n << 6 | (b - 63)
    return n, 4


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is skipped)."""
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    start = 0
    if data.startswith(b">>graph6<<"):
        start = 10
        data = data[10:]
    n, pos = _decode_order(data)
    if n < 1:
        raise Graph6Error("graph6 order must be at least 1", start)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != nbytes:
        raise Graph6Error(
            f"expected {nbytes} adjacency bytes for order {n}, got {len(body)}",
            start + pos + min(len(body), nbytes),
        )
    for i, b in enumerate(body):
        if not 63 <= b <= 126:
            raise Graph6Error(f"character {b!r} outside the graph6 range 63..126", start + pos + i)
    pad = nbytes * 6 - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", start + pos + nbytes - 1)
    adj = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    return Graph(n, adj)


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [(n >> s & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def _encode_bits(n: int, bit: "callable") -> bytes:
    out = bytearray()
    acc = 0
    k = 0
    for v in range(1, n):
        for u in range(v):
            acc = acc << 1 | bit(u, v)
            k += 1
            if k == 6:
                out.append(acc + 63)
                acc = k = 0
    if k:
        out.append((acc << (6 - k)) + 63)
    return bytes(out)


def to_graph6(g: Graph) -> str:
    adj = g.adj
    body = _encode_bits(g.order, lambda u, v: adj[u] >> v & 1)
    return (_encode_order(g.order) + body).decode("ascii")


# -- structural operations ----------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph(g.order, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def induced_subgraph(g: Graph, w: Iterable[int] | int) -> Graph:
    """Subgraph induced by ``w``; members are relabelled in increasing order."""
    keep = bits_of(mask_of(w))
    if not keep:
        raise ValueError("induced subgraph needs a nonempty vertex set")
    if keep[-1] >= g.order:
        raise ValueError(f"vertex {keep[-1]} out of range")
    new = {old: i for i, old in enumerate(keep)}
    adj = [0] * len(keep)
    for old, i in new.items():
        for u in bits_of(g.adj[old]):
            if u in new:
                adj[i] |= 1 << new[u]
    return Graph(len(keep), adj)


def contract_clique(g: Graph, c: Iterable[int] | int) -> tuple[Graph, dict[int, int]]:
    """Merge the clique ``c`` into its lowest-index vertex.

    Returns the contracted graph and the old-to-new label map; every vertex of
    ``c`` maps to the surviving vertex.
    """
    cm = mask_of(c)
    members = bits_of(cm)
    if not members:
        raise ValueError("cannot contract an empty vertex set")
    if members[-1] >= g.order:
        raise ValueError(f"vertex {members[-1]} out of range")
    if not g.is_clique(cm):
        raise ValueError(f"vertices {members} do not induce a clique")
    keeper = members[0]
    survivors = [v for v in g.vertices() if v == keeper or not cm >> v & 1]
    new = {old: i for i, old in enumerate(survivors)}
    merged = 0
    for v in members:
        merged |= g.adj[v]
    merged &= ~cm
    adj = [0] * len(survivors)
    for old, i in new.items():
        row = merged if old == keeper else g.adj[old]
        for u in bits_of(row):
            j = new[keeper] if cm >> u & 1 else new[u]
            if j != i:
                adj[i] |= 1 << j
    mapping = dict(new)
    for v in members:
        mapping[v] = new[keeper]
    return Graph(len(survivors), adj), mapping


def inflate_vertex(g: Graph, v: int, n: int) -> Graph:
    """Replace ``v`` by a clique on ``n`` vertices joined to ``N(v)``.

    Labels of the original vertices are unchanged (``v`` itself becomes the
    first clique vertex); the other ``n - 1`` clique vertices are appended as
    ``order, ..., order + n - 2``.
    """
    if not 0 <= v < g.order:
        raise ValueError(f"vertex {v} out of range for order {g.order}")
    if n < 1:
        raise ValueError("inflation size must be positive")
    order = g.order + n - 1
    clique = (1 << v) | (((1 << (n - 1)) - 1) << g.order)
    nb = g.adj[v]
    adj = list(g.adj) + [0] * (n - 1)
    for u in bits_of(nb):
        adj[u] |= clique
    for x in bits_of(clique):
        adj[x] = nb | (clique & ~(1 << x))
    return Graph(order, adj)


def closed_neighborhoods_equal(g: Graph, u: int, v: int) -> bool:
    return g.closed_neighborhood(u) == g.closed_neighborhood(v)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism certificate: graph6 bytes of the relabelling whose
    upper-triangle bit string (graph6 order) is lexicographically smallest."""
    if g.order > CANONICAL_MAX_ORDER:
        raise ValueError(
            f"canonical_form supports order <= {CANONICAL_MAX_ORDER}, got {g.order}"
        )
    value = _backend.canonical_bits(list(g.adj), g.order)
    nbits = g.order * (g.order - 1) // 2
    return _encode_order(g.order) + _encode_bits(
        g.order, _bit_reader(value, g.order, nbits)
    )


def _bit_reader(value: int, n: int, nbits: int):
    index = {}
    k = 0
    for v in range(1, n):
        for u in range(v):
            index[u, v] = nbits - 1 - k
            k += 1
    return lambda u, v: value >> index[u, v] & 1
