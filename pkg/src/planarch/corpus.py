"""Exhaustive small-graph corpora, one graph per isomorphism class."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

from .graph import Graph, VertexPair, emit_graph6, parse_graph6

__all__ = ["canonical_graph6", "all_graphs", "relabel"]


def relabel(g: Graph, perm: tuple[int, ...] | list[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    return Graph(g.n, (VertexPair.of(perm[u], perm[v]) for u, v in g.edges))


def _degree_respecting_perms(g: Graph) -> Iterator[tuple[int, ...]]:
    # Only maps sending higher degrees to lower labels; enough for a canonical
    # form since degrees are isomorphism invariants.
    degs = [g.neighbor_mask(v).bit_count() for v in range(g.n)]
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(degs[v], []).append(v)
    blocks = [classes[d] for d in sorted(classes, reverse=True)]
    for choice in product(*(permutations(b) for b in blocks)):
        order = [v for block in choice for v in block]
        perm = [0] * g.n
        for label, v in enumerate(order):
            perm[v] = label
        yield tuple(perm)


def canonical_graph6(g: Graph) -> str:
    """Smallest graph6 string over degree-ordered relabellings of ``g``."""
    return min(emit_graph6(relabel(g, p)) for p in _degree_respecting_perms(g))


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[str, ...]:
    if n == 0:
        return (emit_graph6(Graph(0)),)
    seen: set[str] = set()
    for code in _classes(n - 1):
        base = parse_graph6(code)
        for nbrs in range(1 << (n - 1)):
            edges = list(base.edges)
            edges.extend(VertexPair(v, n - 1) for v in range(n - 1) if nbrs >> v & 1)
            seen.add(canonical_graph6(Graph(n, edges)))
    return tuple(sorted(seen))


def all_graphs(n: int) -> list[Graph]:
    """Every graph on ``n`` vertices up to isomorphism, in canonical order.

    Each isomorphism class arises by adding a vertex to a graph on n-1
    vertices, so extending every smaller representative is exhaustive.
    """
    return [parse_graph6(code) for code in _classes(n)]
