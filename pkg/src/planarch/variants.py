"""Exact recognition of IC-, NIC- and 1-planar graphs.

A graph belongs to one of these classes iff some set of crossing pairs,
admissible for the class, turns it into a planar graph once every crossing
is replaced by a degree-4 dummy vertex.

Two exact searches decide this.  The edge search walks the edges in
lexicographic order, leaving each uncrossed or pairing it with a later
independent edge; the planarization fixed so far is a subgraph of every
completion, so it must stay planar.  It drives full enumeration.  The
obstruction search, used for membership and witnesses, only branches on
pairs whose edges both lie in an edge-minimal non-planar subgraph of the
current planarization, and prunes with an Euler count of the faces around
the dummy vertices.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .bounds import edge_ceiling
from .classes import GraphClass
from .errors import BudgetExceeded, EdgeNotInGraph, InvalidConfiguration
from .graph import Graph, VertexPair
from .planarity import is_planar, planar_edges

__all__ = [
    "GraphClass",
    "CrossingPair",
    "CrossingConfiguration",
    "Witness",
    "SearchBudget",
    "candidate_pairs",
    "config_is_valid",
    "planarize",
    "is_member",
    "find_witness",
    "enumerate_configs",
    "exceeds_edge_ceiling",
    "verify_witness",
]


@dataclass(frozen=True, order=True)
class CrossingPair:
    """Two independent edges declared to cross; ``e1 < e2``."""

    e1: VertexPair
    e2: VertexPair

    def __post_init__(self) -> None:
        if not self.e1 < self.e2:
            raise InvalidConfiguration(f"crossing pair not canonical: {self.e1} !< {self.e2}")
        if len({*self.e1, *self.e2}) != 4:
            raise InvalidConfiguration(f"edges {self.e1} and {self.e2} share an endpoint")

    @classmethod
    def of(cls, a: Sequence[int], b: Sequence[int]) -> CrossingPair:
        ea, eb = VertexPair.of(*a), VertexPair.of(*b)
        return cls(ea, eb) if ea < eb else cls(eb, ea)

    @property
    def endpoints(self) -> frozenset[int]:
        return frozenset((*self.e1, *self.e2))

    def as_lists(self) -> list[list[int]]:
        return [list(self.e1), list(self.e2)]

    def __str__(self) -> str:
        return f"{self.e1}x{self.e2}"


@dataclass(frozen=True)
class CrossingConfiguration:
    pairs: tuple[CrossingPair, ...]
    graph_class: GraphClass = GraphClass.ONE_PLANAR

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))

    @property
    def k(self) -> int:
        return len(self.pairs)

    def sort_key(self) -> tuple:
        return (len(self.pairs), self.pairs)

    def as_lists(self) -> list[list[list[int]]]:
        return [p.as_lists() for p in self.pairs]


@dataclass(frozen=True)
class Witness:
    """A configuration together with its planarization.

    ``dummy_map`` sends each pair to the vertex id that replaces its
    crossing; dummies are numbered n, n+1, ... in pair order.
    """

    config: CrossingConfiguration
    planarization: Graph
    dummy_map: Mapping[CrossingPair, int] = field(hash=False)

    @property
    def k(self) -> int:
        return self.config.k


class SearchBudget:
    """Wall-clock limit shared by one or more searches."""

    def __init__(self, seconds: float | None, *, n: int | None = None) -> None:
        self.seconds = seconds
        self.n = n
        self.deadline = None if seconds is None else time.monotonic() + seconds

    def check(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"search budget of {self.seconds}s exhausted", self.n)


def candidate_pairs(g: Graph, cls: GraphClass = GraphClass.ONE_PLANAR) -> list[CrossingPair]:
    """All pairs of edges with four distinct endpoints, lexicographically sorted.

    The list does not depend on ``cls``: adjacent edges never need to
    cross, so every class draws from the same candidates.
    """
    edges = g.edges
    out = []
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if e.u not in f and e.v not in f:
                out.append(CrossingPair(e, f))
    return out


def config_is_valid(
    config: CrossingConfiguration, g: Graph, cls: GraphClass | None = None
) -> bool:
    if cls is None:
        cls = config.graph_class
    for p in config.pairs:
        for e in (p.e1, p.e2):
            if e not in g:
                raise EdgeNotInGraph(f"edge {e} is not in the graph")
    pairs = config.pairs
    if cls is GraphClass.PLANAR:
        return not pairs
    used: set[VertexPair] = set()
    for p in pairs:
        if p.e1 in used or p.e2 in used:
            return False
        used.add(p.e1)
        used.add(p.e2)
    if cls is GraphClass.ONE_PLANAR:
        return True
    limit = 0 if cls is GraphClass.IC_PLANAR else 1
    ends = [p.endpoints for p in pairs]
    for i, a in enumerate(ends):
        for b in ends[i + 1:]:
            if len(a & b) > limit:
                return False
    return True


def planarize(g: Graph, config: CrossingConfiguration) -> Witness:
    """Replace each crossing pair {ab, cd} by a fresh vertex adjacent to a, b, c, d."""
    try:
        ok = config_is_valid(config, g, GraphClass.ONE_PLANAR)
    except EdgeNotInGraph as exc:
        raise InvalidConfiguration(str(exc)) from exc
    if not ok:
        raise InvalidConfiguration("an edge occurs in more than one crossing pair")
    crossed = {e for p in config.pairs for e in (p.e1, p.e2)}
    edges = [e for e in g.edges if e not in crossed]
    dummy_map = {}
    for idx, p in enumerate(config.pairs):
        w = g.n + idx
        dummy_map[p] = w
        edges.extend(VertexPair(x, w) for x in (*p.e1, *p.e2))
    return Witness(config, Graph(g.n + config.k, edges), dummy_map)


def verify_witness(g: Graph, w: Witness, cls: GraphClass | None = None) -> list[str]:
    """Re-check a witness from scratch; returns the list of violated properties."""
    problems = []
    cls = w.config.graph_class if cls is None else cls
    try:
        if not config_is_valid(w.config, g, cls):
            problems.append("configuration invalid for class")
    except EdgeNotInGraph as exc:
        return [f"unknown edge: {exc}"]
    k = w.k
    p = w.planarization
    if p.n != g.n + k or p.m != g.m + 2 * k:
        problems.append("planarization size mismatch")
    if not is_planar(p).planar:
        problems.append("planarization not planar")
    rebuilt = {e for e in p.edges if e.v < g.n}
    for pair, d in w.dummy_map.items():
        if not g.n <= d < p.n or len(p.neighbors(d)) != 4:
            problems.append(f"dummy {d} malformed")
            continue
        if set(p.neighbors(d)) != set(pair.endpoints):
            problems.append(f"dummy {d} not attached to its pair")
        rebuilt.update((pair.e1, pair.e2))
    if set(w.dummy_map) != set(w.config.pairs):
        problems.append("dummy map does not cover the configuration")
    if rebuilt != set(g.edges):
        problems.append("dummy replacement does not reconstruct the graph")
    return problems


def exceeds_edge_ceiling(g: Graph, cls: GraphClass) -> bool:
    ceiling = edge_ceiling(cls, g.n)
    return ceiling is not None and g.m > ceiling


# -- search -----------------------------------------------------------------


def _pair_cap(cls: GraphClass, n: int, m: int) -> int:
    """Most crossing pairs a planar planarization of an (n, m) graph can carry.

    Dummy vertices are pairwise non-adjacent, so the 4k edges at dummies
    form a planar bipartite graph on n + k vertices: 4k <= 2(n + k) - 4.
    """
    if cls is GraphClass.PLANAR or n < 4:
        return 0
    cap = min(m // 2, n - 2)
    if cls is GraphClass.IC_PLANAR:
        cap = min(cap, n // 4)
    return cap


class _Search:
    """Depth-first enumeration of admissible, planarizable configurations.

    ``visit`` is called with the chosen (i, j) edge-index pairs at each leaf
    whose planarization is planar; a true return value stops the search.
    With ``target`` set only configurations of exactly that size are
    produced.  ``checkpoints`` toggles the planarity test on partial
    planarizations; leaves are always tested.
    """

    CHECK_INTERVAL = 512

    def __init__(
        self,
        g: Graph,
        cls: GraphClass,
        budget: SearchBudget | None = None,
        checkpoints: bool = True,
    ) -> None:
        self.g = g
        self.n = g.n
        self.m = g.m
        self.cls = cls
        self.edges = [tuple(e) for e in g.edges]
        self.emask = [(1 << u) | (1 << v) for u, v in self.edges]
        self.partners = [
            [j for j in range(i + 1, self.m) if not self.emask[i] & self.emask[j]]
            for i in range(self.m)
        ]
        self.lower = max(0, self.m - 3 * self.n + 6) if self.n >= 3 else 0
        self.cap = _pair_cap(cls, self.n, self.m)
        self.budget = budget
        self.checkpoints = checkpoints
        self.nodes = 0

    def run(self, visit: Callable[[list[tuple[int, int]]], bool], target: int | None = None) -> bool:
        lo = self.lower if target is None else target
        if lo > self.cap:
            return False
        self.visit = visit
        self.target = target
        self.lo = lo
        self.hi = self.cap if target is None else target
        return self._dfs(0, 0, 0, [], [], [])

    def _tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes % self.CHECK_INTERVAL == 0:
            self.budget.check()

    def _dfs(
        self,
        i: int,
        used: int,
        vused: int,
        pair_masks: list[int],
        fixed: list[tuple[int, int]],
        chosen: list[tuple[int, int]],
    ) -> bool:
        m = self.m
        while i < m and used >> i & 1:
            i += 1
        k = len(chosen)
        if i == m:
            if k < self.lo:
                return False
            if not self.checkpoints and not planar_edges(self.n + k, fixed):
                return False
            return self.visit(chosen)
        self._tick()
        free = (m - i) - bin(used >> i).count("1")
        if k + free // 2 < self.lo:
            return False

        cls = self.cls
        if k < self.hi:
            mi = self.emask[i]
            u, v = self.edges[i]
            w = self.n + k
            for j in self.partners[i]:
                if used >> j & 1:
                    continue
                mj = self.emask[j]
                both = mi | mj
                if cls is GraphClass.IC_PLANAR:
                    if both & vused:
                        continue
                elif cls is GraphClass.NIC_PLANAR:
                    if any(bin(pm & both).count("1") > 1 for pm in pair_masks):
                        continue
                x, y = self.edges[j]
                fixed.extend(((u, w), (v, w), (x, w), (y, w)))
                if not self.checkpoints or planar_edges(w + 1, fixed):
                    chosen.append((i, j))
                    pair_masks.append(both)
                    stop = self._dfs(i + 1, used | (1 << j), vused | both, pair_masks, fixed, chosen)
                    pair_masks.pop()
                    chosen.pop()
                    if stop:
                        del fixed[-4:]
                        return True
                del fixed[-4:]

        # leave edge i uncrossed
        if k + (free - 1) // 2 < self.lo:
            return False
        fixed.append(self.edges[i])
        stop = False
        if not self.checkpoints or planar_edges(self.n + k, fixed):
            stop = self._dfs(i + 1, used, vused, pair_masks, fixed, chosen)
        fixed.pop()
        return stop

    def configuration(self, chosen: Iterable[tuple[int, int]]) -> CrossingConfiguration:
        es = self.g.edges
        return CrossingConfiguration(
            tuple(CrossingPair(es[i], es[j]) for i, j in chosen), self.cls
        )


class _ObstructionSearch:
    """Membership search that branches on pairs inside a non-planar obstruction.

    If the planarization of configuration C is not planar it contains an
    edge-minimal non-planar subgraph K.  Crossing one edge of K with an edge
    outside K merely subdivides K, so every admissible extension of C that
    planarizes to a planar graph adds a pair whose two edges both lie in K.
    Branching on exactly those pairs keeps the search complete.
    """

    CHECK_INTERVAL = 64

    def __init__(self, g: Graph, cls: GraphClass, budget: SearchBudget | None = None) -> None:
        self.g = g
        self.n = g.n
        self.cls = cls
        self.edges = [tuple(e) for e in g.edges]
        self.index = {e: i for i, e in enumerate(self.edges)}
        self.emask = [(1 << u) | (1 << v) for u, v in self.edges]
        self.lower = max(0, g.m - 3 * g.n + 6) if g.n >= 3 else 0
        self.cap = _pair_cap(cls, g.n, g.m)
        self.budget = budget
        self.nodes = 0
        self.connected = _is_connected(g)
        self.kites = [
            [[self.index.get((min(x, y), max(x, y)), -1) for x, y in ((a, c), (a, d), (b, c), (b, d))]
             for c, d in self.edges]
            for a, b in self.edges
        ]

    def run(
        self, visit: Callable[[tuple[tuple[int, int], ...]], bool], limit: int | None = None
    ) -> bool:
        limit = self.cap if limit is None else min(limit, self.cap)
        if self.lower > limit:
            return False
        self.visit = visit
        self.limit = limit
        self.slack = 2 * (3 * self.n - 6 - len(self.edges) + limit)
        self.seen: set[tuple[tuple[int, int], ...]] = set()
        return self._node((), 0, 0, ())

    def _missing_kite_sides(self, chosen: tuple[tuple[int, int], ...], used: int) -> int:
        """Lower bound on dummy corners that cannot lie in triangular faces.

        For a pair {ab, cd} drawn as a true crossing the four corners at its
        dummy face the sides ac, ad, bc, bd; a side is missing when it is not
        an uncrossed edge.  Any other rotation has at least two missing
        sides.  In a connected plane graph at most 2(3V - 6 - E) dummy
        corners lie in non-triangular faces, and crossing more edges later
        only removes sides.
        """
        total = 0
        for i, j in chosen:
            miss = 0
            for side in self.kites[i][j]:
                if side < 0 or used >> side & 1:
                    miss += 1
            total += miss if miss < 2 else 2
        return total

    def planarization(self, chosen: tuple[tuple[int, int], ...]) -> list[tuple[int, int]]:
        crossed = {i for pair in chosen for i in pair}
        out = [e for i, e in enumerate(self.edges) if i not in crossed]
        for d, (i, j) in enumerate(chosen):
            w = self.n + d
            (a, b), (c, e) = self.edges[i], self.edges[j]
            out.extend(((a, w), (b, w), (c, w), (e, w)))
        return out

    def _node(
        self, chosen: tuple[tuple[int, int], ...], used: int, vused: int, masks: tuple[int, ...]
    ) -> bool:
        if chosen in self.seen:
            return False
        self.seen.add(chosen)
        self.nodes += 1
        if self.budget is not None and self.nodes % self.CHECK_INTERVAL == 0:
            self.budget.check()
        k = len(chosen)
        if self.connected and k and self._missing_kite_sides(chosen, used) > self.slack:
            return False
        nv = self.n + k
        pl = self.planarization(chosen)
        if k >= self.lower and planar_edges(nv, pl):
            return self.visit(chosen)
        if k >= self.limit:
            return False
        block = [self.index[e] for e in _obstruction(nv, pl, self.n)]
        cls = self.cls
        for a, i in enumerate(block):
            if used >> i & 1:
                continue
            mi = self.emask[i]
            for j in block[a + 1:]:
                mj = self.emask[j]
                if used >> j & 1 or mi & mj:
                    continue
                both = mi | mj
                if cls is GraphClass.IC_PLANAR:
                    if both & vused:
                        continue
                elif cls is GraphClass.NIC_PLANAR:
                    if any(bin(pm & both).count("1") > 1 for pm in masks):
                        continue
                pair = (i, j) if i < j else (j, i)
                nxt = tuple(sorted(chosen + (pair,)))
                if self._node(nxt, used | (1 << i) | (1 << j), vused | both, masks + (both,)):
                    return True
        return False


def _is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        v = 0
        f = frontier
        while f:
            if f & 1:
                nxt |= g.neighbor_mask(v)
            f >>= 1
            v += 1
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def _obstruction(nv: int, edges: list[tuple[int, int]], n: int) -> list[tuple[int, int]]:
    """Original edges (both ends < n) of an edge-minimal non-planar subgraph.

    Greedy deletion: original edges are tried first so that edges at dummy
    vertices, which can never be crossed again, stay in the obstruction.
    Pendant edges are dropped without a test, and deletion stops as soon as
    the remainder is a subdivision of K5 or K3,3.
    """
    keep = _strip_pendants(nv, [e for e in edges if e[1] < n] + [e for e in edges if e[1] >= n])
    idx = 0
    while idx < len(keep) and not _is_kuratowski_shape(nv, keep):
        trial = _strip_pendants(nv, keep[:idx] + keep[idx + 1:])
        if not planar_edges(nv, trial):
            keep = trial
        else:
            idx += 1
    return sorted(e for e in keep if e[1] < n)


def _strip_pendants(nv: int, edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    deg = [0] * nv
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    if 1 not in deg:
        return edges
    alive = list(edges)
    while True:
        nxt = [e for e in alive if deg[e[0]] > 1 and deg[e[1]] > 1]
        if len(nxt) == len(alive):
            return alive
        deg = [0] * nv
        for u, v in nxt:
            deg[u] += 1
            deg[v] += 1
        alive = nxt


def _is_kuratowski_shape(nv: int, edges: list[tuple[int, int]]) -> bool:
    """Degree profile of a connected K5 or K3,3 subdivision.

    Only meaningful for a graph already known to be non-planar: smoothing
    the degree-2 vertices then leaves a non-planar 4-regular graph on five
    vertices or cubic graph on six, which must be simple, i.e. K5 or K3,3.
    """
    deg = [0] * nv
    adj: list[list[int]] = [[] for _ in range(nv)]
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        adj[u].append(v)
        adj[v].append(u)
    branch = [d for d in deg if d > 2]
    if not (len(branch) == 5 and all(d == 4 for d in branch)) and not (
        len(branch) == 6 and all(d == 3 for d in branch)
    ):
        return False
    start = edges[0][0]
    seen = {start}
    todo = [start]
    while todo:
        for w in adj[todo.pop()]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == sum(1 for d in deg if d)


STRATEGIES = ("obstruction", "edges")


def _trivial(g: Graph, cls: GraphClass, fast_paths: bool) -> bool | None:
    """Answer without search when possible, else None."""
    if cls is GraphClass.PLANAR or g.n <= 3:
        return is_planar(g).planar
    if fast_paths and exceeds_edge_ceiling(g, cls):
        return False
    if is_planar(g).planar:
        return True
    return None


def is_member(
    g: Graph,
    cls: GraphClass,
    *,
    budget: SearchBudget | None = None,
    strategy: str = "obstruction",
    fast_paths: bool = True,
) -> bool:
    """Decide whether ``g`` belongs to ``cls``.

    ``strategy`` picks the search: ``"obstruction"`` branches on pairs
    inside a non-planar subgraph, ``"edges"`` walks the edges in
    lexicographic order.  Both are exact.  ``fast_paths=False`` disables the
    rejection by the class's edge-count ceiling.
    """
    quick = _trivial(g, cls, fast_paths)
    if quick is not None:
        return quick
    if strategy == "obstruction":
        return _ObstructionSearch(g, cls, budget).run(lambda chosen: True)
    if strategy == "edges":
        return _Search(g, cls, budget).run(lambda chosen: True)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def find_witness(
    g: Graph,
    cls: GraphClass,
    *,
    budget: SearchBudget | None = None,
    strategy: str = "obstruction",
) -> Witness | None:
    """Minimum-size witness for ``g`` in ``cls``, or None for non-members.

    Sizes are tried in increasing order starting at the Euler lower bound;
    among witnesses of the minimum size the lexicographically first
    configuration is returned.
    """
    if cls is GraphClass.PLANAR or g.n <= 3 or is_planar(g).planar:
        if not is_planar(g).planar:
            return None
        return planarize(g, CrossingConfiguration((), cls))
    if exceeds_edge_ceiling(g, cls):
        return None
    if strategy == "edges":
        chosen = _min_witness_edges(g, cls, budget)
    elif strategy == "obstruction":
        chosen = _min_witness_obstruction(g, cls, budget)
    else:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if chosen is None:
        return None
    es = g.edges
    config = CrossingConfiguration(tuple(CrossingPair(es[i], es[j]) for i, j in chosen), cls)
    return planarize(g, config)


def _min_witness_edges(
    g: Graph, cls: GraphClass, budget: SearchBudget | None
) -> Sequence[tuple[int, int]] | None:
    search = _Search(g, cls, budget)
    found: list[list[tuple[int, int]]] = []

    def keep(chosen: list[tuple[int, int]]) -> bool:
        found.append(list(chosen))
        return True

    if not search.run(keep):
        return None
    upper = len(found[0])
    for k in range(search.lower, upper + 1):
        found.clear()
        if search.run(keep, target=k):
            return found[0]
    raise AssertionError("witness vanished during iterative deepening")


def _min_witness_obstruction(
    g: Graph, cls: GraphClass, budget: SearchBudget | None
) -> Sequence[tuple[int, int]] | None:
    search = _ObstructionSearch(g, cls, budget)
    found: list[tuple[tuple[int, int], ...]] = []

    def keep(chosen: tuple[tuple[int, int], ...]) -> bool:
        found.append(chosen)
        return True

    if not search.run(keep):
        return None
    upper = len(found[0])

    def collect(chosen: tuple[tuple[int, int], ...]) -> bool:
        found.append(chosen)
        return False

    # Every planar node at the minimum depth is reached, so the minimum of
    # the collected configurations is the lexicographically first witness.
    for k in range(search.lower, upper + 1):
        found.clear()
        search.run(collect, limit=k)
        if found:
            return min(found)
    raise AssertionError("witness vanished during iterative deepening")


def enumerate_configs(
    g: Graph, cls: GraphClass, *, budget: SearchBudget | None = None, checkpoints: bool = True
) -> list[CrossingConfiguration]:
    """Every admissible configuration whose planarization is planar.

    Sorted by size, then lexicographically.  Exponential; meant for small
    graphs.
    """
    if cls is GraphClass.PLANAR or g.n <= 3:
        return [CrossingConfiguration((), cls)] if is_planar(g).planar else []
    if exceeds_edge_ceiling(g, cls):
        return []
    search = _Search(g, cls, budget, checkpoints)
    out: list[CrossingConfiguration] = []

    def collect(chosen: list[tuple[int, int]]) -> bool:
        out.append(search.configuration(chosen))
        return False

    search.run(collect)
    out.sort(key=CrossingConfiguration.sort_key)
    return out
