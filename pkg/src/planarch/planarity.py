"""Exact planarity decision.

The positive test is the left-right criterion of de Fraysseix and
Rosenstiehl in Brandes' formulation, reduced to the testing phase (no
embedding is built).  Every call first applies the Euler bound m <= 3n - 6.
"""

from __future__ import annotations

import enum
import sys
from dataclasses import dataclass
from typing import Sequence

from .errors import Unsupported
from .graph import Graph

__all__ = [
    "Reason",
    "PlanarityVerdict",
    "is_planar",
    "planar_edges",
    "min_crossing_pairs_lower_bound",
]


class Reason(enum.Enum):
    ALGORITHM = "algorithm"
    EDGE_BOUND = "edge_bound"


@dataclass(frozen=True)
class PlanarityVerdict:
    planar: bool
    reason: Reason

    def __bool__(self) -> bool:
        return self.planar


def is_planar(g: Graph) -> PlanarityVerdict:
    """Decide whether ``g`` admits a plane embedding."""
    n, m = g.n, g.m
    if n >= 3 and m > 3 * n - 6:
        return PlanarityVerdict(False, Reason.EDGE_BOUND)
    return PlanarityVerdict(planar_edges(n, g.edges), Reason.ALGORITHM)


def min_crossing_pairs_lower_bound(n: int, m: int) -> int:
    """Fewest crossing pairs any planarization of an (n, m) graph needs.

    k crossings give n + k vertices and m + 2k edges, and planarity of the
    result forces m + 2k <= 3(n + k) - 6.
    """
    if n < 3:
        raise Unsupported(f"crossing lower bound needs n >= 3, got {n}")
    return max(0, m - 3 * n + 6)


def planar_edges(n: int, edges: Sequence[Sequence[int]]) -> bool:
    """Planarity of the graph on ``0..n-1`` with the given simple edge list.

    Low-level entry point used by the configuration search; skips the
    construction of a :class:`Graph`.
    """
    m = len(edges)
    if m < 9:
        return True  # K3,3 is the smallest non-planar graph
    if m > 3 * n - 6:
        return False
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return _lr_test(n, m, adj)


def _lr_test(n: int, m: int, adj: list[list[int]]) -> bool:
    """Left-right test of a simple graph given by adjacency lists.

    Conflict pairs are lists [left.low, left.high, right.low, right.high]
    of oriented-edge ids, -1 standing for an empty end.
    """
    if n > 900:
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 2 * n + 100))
    height = [-1] * n
    parent_edge = [-1] * n
    src = [0] * m
    dst = [0] * m
    lowpt = [0] * m
    lowpt2 = [0] * m
    nesting = [0] * m
    out: list[list[int]] = [[] for _ in range(n)]
    ref = [-1] * m
    bottom: list[list[int] | None] = [None] * m
    S: list[list[int]] = []
    counter = [0]

    def orient(v: int) -> None:
        e = parent_edge[v]
        hv = height[v]
        pv = src[e] if e != -1 else -1
        outv = out[v]
        for w in adj[v]:
            hw = height[w]
            if hw == -1:
                ei = counter[0]
                counter[0] = ei + 1
                src[ei] = v
                dst[ei] = w
                outv.append(ei)
                parent_edge[w] = ei
                height[w] = hv + 1
                lowpt[ei] = hv
                lowpt2[ei] = hv
                orient(w)
            elif hw < hv and w != pv:
                ei = counter[0]
                counter[0] = ei + 1
                src[ei] = v
                dst[ei] = w
                outv.append(ei)
                lowpt[ei] = hw
                lowpt2[ei] = hv
            else:
                continue
            lp = lowpt[ei]
            nesting[ei] = 2 * lp + 1 if lowpt2[ei] < hv else 2 * lp
            if e != -1:
                le = lowpt[e]
                if lp < le:
                    lowpt2[e] = min(le, lowpt2[ei])
                    lowpt[e] = lp
                elif lp > le:
                    lowpt2[e] = min(lowpt2[e], lp)
                else:
                    lowpt2[e] = min(lowpt2[e], lowpt2[ei])

    def add_constraints(ei: int, e: int) -> bool:
        P = [-1, -1, -1, -1]
        base = bottom[ei]
        le = lowpt[e]
        while True:
            Q = S.pop()
            if Q[0] != -1 or Q[1] != -1:
                if Q[2] != -1 or Q[3] != -1:
                    return False
                Q = [Q[2], Q[3], Q[0], Q[1]]
            if lowpt[Q[2]] > le:
                if P[2] == -1 and P[3] == -1:
                    P[3] = Q[3]
                else:
                    ref[P[2]] = Q[3]
                P[2] = Q[2]
            if (S[-1] if S else None) is base:
                break
        li = lowpt[ei]
        while S:
            T = S[-1]
            lc = T[1] != -1 and lowpt[T[1]] > li
            rc = T[3] != -1 and lowpt[T[3]] > li
            if not (lc or rc):
                break
            Q = S.pop()
            if rc:
                if lc:
                    return False
                Q = [Q[2], Q[3], Q[0], Q[1]]
            if P[2] != -1:
                ref[P[2]] = Q[3]
            else:
                P[3] = Q[3]
            if Q[2] != -1:
                P[2] = Q[2]
            if P[0] == -1 and P[1] == -1:
                P[1] = Q[1]
            else:
                ref[P[0]] = Q[1]
            P[0] = Q[0]
        if P[0] != -1 or P[1] != -1 or P[2] != -1 or P[3] != -1:
            S.append(P)
        return True

    def lowest(P: list[int]) -> int:
        if P[0] == -1 and P[1] == -1:
            return lowpt[P[2]]
        if P[2] == -1 and P[3] == -1:
            return lowpt[P[0]]
        return min(lowpt[P[0]], lowpt[P[2]])

    def trim(u: int) -> None:
        hu = height[u]
        while S and lowest(S[-1]) == hu:
            S.pop()
        if S:
            P = S[-1]
            while P[1] != -1 and dst[P[1]] == u:
                P[1] = ref[P[1]]
            if P[1] == -1 and P[0] != -1:
                ref[P[0]] = P[2]
                P[0] = -1
            while P[3] != -1 and dst[P[3]] == u:
                P[3] = ref[P[3]]
            if P[3] == -1 and P[2] != -1:
                ref[P[2]] = P[0]
                P[2] = -1

    def test(v: int) -> bool:
        e = parent_edge[v]
        hv = height[v]
        first = True
        for ei in out[v]:
            w = dst[ei]
            bottom[ei] = S[-1] if S else None
            if ei == parent_edge[w]:
                if not test(w):
                    return False
            else:
                S.append([-1, -1, ei, ei])
            if lowpt[ei] < hv and not first:
                if not add_constraints(ei, e):
                    return False
            first = False
        if e != -1:
            trim(src[e])
        return True

    roots = []
    for r in range(n):
        if height[r] == -1:
            height[r] = 0
            roots.append(r)
            orient(r)
    key = nesting.__getitem__
    for lst in out:
        if len(lst) > 1:
            lst.sort(key=key)
    return all(test(r) for r in roots)
