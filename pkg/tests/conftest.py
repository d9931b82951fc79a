import itertools

import numpy as np
import pytest

from motifclust import DirectedGraph


def random_digraph(n, p, rng, signed=False):
    """Erdos-Renyi style directed graph, optionally with random edge signs."""
    mask = rng.random((n, n)) < p
    np.fill_diagonal(mask, False)
    edges = np.argwhere(mask)
    signs = rng.choice([-1, 1], size=len(edges)) if signed else None
    return DirectedGraph(n, edges, signs=signs)


def undirected_graph(n, pairs):
    """Graph with both orientations of each pair."""
    e = list(pairs) + [(b, a) for a, b in pairs]
    return DirectedGraph(n, e)


def clique_pairs(nodes):
    return list(itertools.combinations(nodes, 2))


@pytest.fixture
def rng():
    return np.random.default_rng(0)
