"""
Shared fixtures and random graph factories.
"""

import random

import pytest

from qspectra.graphs.graph import Graph, random_graph


def random_graphs(count, min_order, max_order, seed):
    """`count` G(n, p) graphs with n and p drawn from a seeded generator."""
    rng = random.Random(seed)
    return [
        random_graph(rng.randint(min_order, max_order), rng.uniform(0.2, 0.8), seed=rng.randrange(2 ** 31))
        for _ in range(count)
    ]


def random_relabeling(graph, rng):
    perm = list(range(graph.n))
    rng.shuffle(perm)
    return Graph(graph.n, frozenset((perm[u], perm[v]) for u, v in graph.edges))


@pytest.fixture
def rng():
    return random.Random(20240229)


@pytest.fixture
def k2():
    return Graph.from_edges(2, [(0, 1)])


@pytest.fixture
def k3():
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def p3():
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def cache_path(tmp_path):
    return str(tmp_path / "spectra.jsonl")
