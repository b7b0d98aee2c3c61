"""Exact recognition of beyond-planar graph classes on small graphs.

Decides planarity and IC-, NIC- and 1-planarity by exhaustive search over
crossing configurations, builds the sparse maximal IC-planar family G_n and
checks tabulated edge-density bounds with exact rationals.
"""

from __future__ import annotations

from .bounds import BoundKind, BoundsRow, Column, density_bound
from .classes import GraphClass
from .errors import (
    BudgetExceeded,
    DuplicateEdge,
    EdgeNotInGraph,
    FormatError,
    IndexOutOfRange,
    InvalidConfiguration,
    InvalidEdge,
    MembershipViolated,
    PlanarchError,
    Unsupported,
)
from .extremal import (
    LemmaReport,
    generate_complete,
    generate_cycle,
    generate_gn,
    is_maximal,
    verify_lemma,
)
from .graph import Graph, VertexPair, degree, emit_graph6, graph_from_edges, non_edges, parse_graph6
from .planarity import PlanarityVerdict, Reason, is_planar, min_crossing_pairs_lower_bound
from .variants import (
    CrossingConfiguration,
    CrossingPair,
    SearchBudget,
    Witness,
    candidate_pairs,
    config_is_valid,
    enumerate_configs,
    find_witness,
    is_member,
    planarize,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "BoundKind", "BoundsRow", "Column", "density_bound",
    "GraphClass",
    "BudgetExceeded", "DuplicateEdge", "EdgeNotInGraph", "FormatError", "IndexOutOfRange",
    "InvalidConfiguration", "InvalidEdge", "MembershipViolated", "PlanarchError", "Unsupported",
    "LemmaReport", "generate_complete", "generate_cycle", "generate_gn", "is_maximal", "verify_lemma",
    "Graph", "VertexPair", "degree", "emit_graph6", "graph_from_edges", "non_edges", "parse_graph6",
    "PlanarityVerdict", "Reason", "is_planar", "min_crossing_pairs_lower_bound",
    "CrossingConfiguration", "CrossingPair", "SearchBudget", "Witness", "candidate_pairs",
    "config_is_valid", "enumerate_configs", "find_witness", "is_member", "planarize", "verify_witness",
]
