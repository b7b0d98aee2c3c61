from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest

from planarch.corpus import all_graphs, canonical_graph6, relabel
from planarch.graph import graph_from_edges

# Number of graphs on n unlabelled vertices.
KNOWN_COUNTS = [1, 1, 2, 4, 11, 34, 156]


@pytest.mark.parametrize("n", range(0, 7))
def test_counts(n):
    assert len(all_graphs(n)) == KNOWN_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 7))
def test_pairwise_non_isomorphic(n):
    nxs = []
    for g in all_graphs(n):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges)
        nxs.append(h)
    for a, b in combinations(nxs, 2):
        assert not nx.is_isomorphic(a, b)


def test_canonical_form_ignores_labels():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 7)
        g = graph_from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_graph6(relabel(g, perm)) == canonical_graph6(g)
