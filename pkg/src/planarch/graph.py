"""Simple undirected graphs on the vertex set 0..n-1 and graph6 I/O."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import DuplicateEdge, FormatError, IndexOutOfRange, InvalidEdge

__all__ = [
    "VertexPair",
    "Graph",
    "graph_from_edges",
    "parse_graph6",
    "emit_graph6",
    "non_edges",
    "degree",
]

GRAPH6_HEADER = ">>graph6<<"


class VertexPair(NamedTuple):
    """Unordered vertex pair, stored with ``u < v``."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> VertexPair:
        if a == b:
            raise InvalidEdge(f"self-loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)

    def __str__(self) -> str:
        return f"{{{self.u},{self.v}}}"


class Graph:
    """Immutable simple undirected graph.

    Edges are canonical :class:`VertexPair` values kept in lexicographic
    order, so iteration is deterministic.  Use :func:`graph_from_edges` to
    build one from untrusted input.
    """

    __slots__ = ("_n", "_edges", "_edge_set", "_nbrs")

    def __init__(self, n: int, edges: Iterable[VertexPair] = ()) -> None:
        # Trusted constructor: edges must already be canonical and unique.
        self._n = n
        self._edges: tuple[VertexPair, ...] = tuple(sorted(edges))
        self._edge_set = frozenset(self._edges)
        nbrs = [0] * n
        for u, v in self._edges:
            nbrs[u] |= 1 << v
            nbrs[v] |= 1 << u
        self._nbrs: tuple[int, ...] = tuple(nbrs)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[VertexPair, ...]:
        return self._edges

    def has_edge(self, a: int, b: int) -> bool:
        return a != b and VertexPair(min(a, b), max(a, b)) in self._edge_set

    def __contains__(self, pair: object) -> bool:
        return pair in self._edge_set

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        mask = self._nbrs[v]
        return [w for w in range(self._n) if mask >> w & 1]

    def neighbor_mask(self, v: int) -> int:
        """Bitset of the neighbours of ``v``."""
        self._check_vertex(v)
        return self._nbrs[v]

    def adjacency(self) -> list[list[int]]:
        return [self.neighbors(v) for v in range(self._n)]

    def with_edge(self, a: int, b: int) -> Graph:
        e = VertexPair.of(a, b)
        self._check_vertex(e.v)
        if e in self._edge_set:
            raise DuplicateEdge(f"edge {e} already present")
        return Graph(self._n, self._edges + (e,))

    def without_edge(self, a: int, b: int) -> Graph:
        e = VertexPair.of(a, b)
        if e not in self._edge_set:
            raise InvalidEdge(f"edge {e} not present")
        return Graph(self._n, (f for f in self._edges if f != e))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{self._n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def graph_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edges`` and build a :class:`Graph` on ``n`` vertices.

    Raises InvalidEdge for a self-loop, DuplicateEdge when an unordered pair
    occurs twice, IndexOutOfRange for an endpoint outside ``0..n-1``.
    """
    if n < 0:
        raise IndexOutOfRange(f"vertex count must be non-negative, got {n}")
    seen: set[VertexPair] = set()
    for a, b in edges:
        e = VertexPair.of(a, b)
        if e.u < 0 or e.v >= n:
            raise IndexOutOfRange(f"edge {e} has an endpoint outside 0..{n - 1}")
        if e in seen:
            raise DuplicateEdge(f"edge {e} given twice")
        seen.add(e)
    return Graph(n, seen)


def non_edges(g: Graph) -> list[VertexPair]:
    """All vertex pairs absent from ``g``, lexicographically sorted."""
    return [VertexPair(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]


def degree(g: Graph, v: int) -> int:
    return g.neighbor_mask(v).bit_count()


# -- graph6 -----------------------------------------------------------------


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    if n < 1 << 36:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise FormatError(f"graph order {n} too large for graph6", 0)


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no trailing newline)."""
    groups = _encode_n(g.n)
    acc = nbits = 0
    for j in range(1, g.n):
        mask = g.neighbor_mask(j)
        for i in range(j):
            acc = (acc << 1) | (mask >> i & 1)
            nbits += 1
            if nbits == 6:
                groups.append(acc)
                acc = nbits = 0
    if nbits:
        groups.append(acc << (6 - nbits))
    return "".join(chr(x + 63) for x in groups)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line.

    An optional ``>>graph6<<`` header and surrounding whitespace are ignored.
    Byte offsets in :class:`FormatError` count from the first character of
    the graph6 payload.
    """
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise FormatError("empty graph6 string", 0)
    vals = []
    for pos, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise FormatError(f"character {ch!r} outside graph6 range", pos)
        vals.append(c - 63)

    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise FormatError("truncated 8-byte order header", len(vals))
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        if len(vals) < 4:
            raise FormatError("truncated 4-byte order header", len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - pos != need:
        raise FormatError(
            f"expected {need} payload bytes for n={n}, found {len(vals) - pos}",
            min(len(vals), pos + need),
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            x = vals[pos + k // 6]
            if x >> (5 - k % 6) & 1:
                edges.append(VertexPair(i, j))
            k += 1
    if nbits % 6 and vals[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise FormatError("non-zero padding bits", len(vals) - 1)
    return Graph(n, edges)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[str]:
    """Yield non-blank graph6 lines with surrounding whitespace removed."""
    for line in lines:
        line = line.strip()
        if line:
            yield line
