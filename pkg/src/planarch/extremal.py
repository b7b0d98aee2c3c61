"""Extremal graphs, tabulated density bounds, maximality and the sparsity harness.

G_n is labelled circle first: vertices 0..n-3 form the cycle, p = n-2 and
q = n-1 are the poles.  Fixed labels keep graph6 output and censuses
byte-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .bounds import TABLE, BoundKind, BoundsRow, Column, density_bound
from .classes import GraphClass
from .errors import BudgetExceeded, MembershipViolated, Unsupported
from .graph import Graph, VertexPair, non_edges
from .variants import CrossingConfiguration, CrossingPair, SearchBudget, enumerate_configs, is_member

__all__ = [
    "generate_gn",
    "generate_complete",
    "generate_cycle",
    "poles",
    "density_bound",
    "BoundKind",
    "BoundsRow",
    "Column",
    "TABLE",
    "is_maximal",
    "pair_shape",
    "census_summary",
    "LemmaReport",
    "verify_lemma",
    "SHAPES",
]


def generate_gn(n: int) -> Graph:
    """The (n-2)-cycle plus two adjacent poles joined to every cycle vertex."""
    if n < 5:
        raise Unsupported(f"G_n is defined for n >= 5, got {n}")
    c = n - 2
    p, q = n - 2, n - 1
    edges = {VertexPair.of(i, (i + 1) % c) for i in range(c)}
    for i in range(c):
        edges.add(VertexPair(i, p))
        edges.add(VertexPair(i, q))
    edges.add(VertexPair(p, q))
    return Graph(n, edges)


def generate_complete(n: int) -> Graph:
    if n < 1:
        raise Unsupported(f"complete graph needs n >= 1, got {n}")
    return Graph(n, (VertexPair(u, v) for u in range(n) for v in range(u + 1, n)))


def generate_cycle(n: int) -> Graph:
    if n < 3:
        raise Unsupported(f"cycle needs n >= 3, got {n}")
    return Graph(n, {VertexPair.of(i, (i + 1) % n) for i in range(n)})


def poles(n: int) -> tuple[int, int]:
    return n - 2, n - 1


# -- maximality ---------------------------------------------------------------


def is_maximal(
    g: Graph, cls: GraphClass, *, budget: SearchBudget | None = None
) -> tuple[bool, list[VertexPair]]:
    """Whether no non-edge can be added to ``g`` without leaving ``cls``.

    Returns the verdict and the lexicographically sorted addable non-edges.
    Raises MembershipViolated when ``g`` itself is not in ``cls``.
    """
    if not is_member(g, cls, budget=budget):
        raise MembershipViolated(f"graph is not {cls.label}; maximality is undefined")
    addable = [e for e in non_edges(g) if is_member(g.with_edge(*e), cls, budget=budget)]
    return not addable, addable


# -- census of G_n configurations --------------------------------------------

SHAPES = ("pq_x_circle", "circle_x_circle", "pole_x_circle", "vp_x_vq", "other")


def pair_shape(pair: CrossingPair, n: int) -> str:
    """Classify a crossing pair of G_n by where its two edges lie."""
    p, q = poles(n)

    def kind(e: VertexPair) -> str:
        ends = {e.u, e.v} & {p, q}
        if len(ends) == 2:
            return "pq"
        if len(ends) == 1:
            return "p" if p in ends else "q"
        return "circle"

    a, b = sorted((kind(pair.e1), kind(pair.e2)))
    if (a, b) == ("circle", "pq"):
        return "pq_x_circle"
    if (a, b) == ("circle", "circle"):
        return "circle_x_circle"
    if a == "circle" and b in ("p", "q"):
        return "pole_x_circle"
    if (a, b) == ("p", "q"):
        return "vp_x_vq"
    return "other"


def _consecutive_circle_edge(e: VertexPair, n: int) -> bool:
    c = n - 2
    return e.v < c and (e.v - e.u) % c in (1, c - 1)


def census_summary(configs: list[CrossingConfiguration], n: int) -> dict[str, Any]:
    sizes: dict[int, int] = {}
    shapes = dict.fromkeys(SHAPES, 0)
    for config in configs:
        sizes[config.k] = sizes.get(config.k, 0) + 1
        for pair in config.pairs:
            shapes[pair_shape(pair, n)] += 1
    return {
        "count": len(configs),
        "sizes": {str(k): sizes[k] for k in sorted(sizes)},
        "shapes": shapes,
        "configs": [c.as_lists() for c in configs],
    }


def _census_ok(configs: list[CrossingConfiguration], n: int) -> bool:
    if len(configs) != n - 2:
        return False
    p, q = poles(n)
    for config in configs:
        if config.k != 1:
            return False
        (pair,) = config.pairs
        if pair_shape(pair, n) != "pq_x_circle":
            return False
        circle = pair.e1 if pair.e2 == (p, q) else pair.e2
        if not _consecutive_circle_edge(circle, n):
            return False
    return True


# -- harness ------------------------------------------------------------------


@dataclass
class LemmaReport:
    n: int
    edge_count: int
    expected: int
    is_ic: bool
    is_maximal: bool
    addable: list[VertexPair]
    census: dict[str, Any]
    checks: dict[str, bool | None] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "edge_count": self.edge_count,
            "expected": self.expected,
            "is_ic": self.is_ic,
            "is_maximal": self.is_maximal,
            "addable": [list(e) for e in self.addable],
            "census": self.census,
            "checks": dict(self.checks),
            "passed": self.passed,
        }


def _verify_one(n: int, budget: SearchBudget) -> LemmaReport:
    g = generate_gn(n)
    ic = GraphClass.IC_PLANAR
    member = is_member(g, ic, budget=budget)
    if member:
        maximal, addable = is_maximal(g, ic, budget=budget)
    else:
        maximal, addable = False, []
    configs = enumerate_configs(g, ic, budget=budget)
    checks: dict[str, bool | None] = {
        "edge_count": g.m == 3 * n - 5,
        "is_ic": member,
        "is_maximal": maximal,
        # K5 admits pairs without {p,q}; the shape argument starts at n = 6.
        "census_shape": _census_ok(configs, n) if n >= 6 else None,
    }
    return LemmaReport(
        n=n,
        edge_count=g.m,
        expected=3 * n - 5,
        is_ic=member,
        is_maximal=maximal,
        addable=addable,
        census=census_summary(configs, n),
        checks=checks,
    )


def verify_lemma(n_min: int, n_max: int, *, budget: float | None = 60.0) -> list[LemmaReport]:
    """Check sparsity, IC-planarity, maximality and the census of G_n.

    ``budget`` is a wall-clock limit in seconds per order n.
    """
    if n_min < 5:
        raise Unsupported(f"verification starts at n = 5, got n_min = {n_min}")
    if n_max < n_min:
        raise Unsupported(f"empty range {n_min}..{n_max}")
    reports = []
    for n in range(n_min, n_max + 1):
        try:
            reports.append(_verify_one(n, SearchBudget(budget, n=n)))
        except BudgetExceeded as exc:
            raise BudgetExceeded(f"budget exhausted while verifying n = {n}", n) from exc
    return reports
