"""Tests for the tricyclic graph enumeration."""

import networkx as nx
import pytest

from qspectra.errors import EnumerationRangeError
from qspectra.graphs.canonical import canonical_form
from qspectra.graphs.graph import Graph, complete_graph, is_tricyclic, tricyclic_class
from qspectra.search.enumeration import (
    enumerate_class,
    enumerate_tricyclic,
    enumerate_tricyclic_naive,
    run_enumeration,
)

EXPECTED_COUNTS = {4: 1, 5: 4, 6: 22, 7: 107, 8: 486}


def _codes(graphs):
    return sorted(canonical_form(g).graph6() for g in graphs)


def _atlas(n):
    """J_n read off the networkx atlas of all graphs with at most 7 vertices."""
    return [
        Graph.from_networkx(g) for g in nx.graph_atlas_g()
        if g.number_of_nodes() == n and g.number_of_edges() == n + 2 and nx.is_connected(g)
    ]


def test_only_k4_on_four_vertices():
    graphs = enumerate_tricyclic(4)
    assert len(graphs) == 1
    assert canonical_form(graphs[0]) == canonical_form(complete_graph(4))


@pytest.mark.parametrize("n", [5, 6])
def test_counts_small(n):
    graphs = enumerate_tricyclic(n)
    assert len(graphs) == EXPECTED_COUNTS[n]
    assert len(set(_codes(graphs))) == len(graphs)
    assert all(is_tricyclic(g) for g in graphs)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_matches_graph_atlas(n):
    assert _codes(enumerate_tricyclic(n)) == _codes(_atlas(n))


@pytest.mark.slow
def test_matches_graph_atlas_at_seven():
    graphs = enumerate_tricyclic(7)
    assert len(graphs) == EXPECTED_COUNTS[7]
    assert _codes(graphs) == _codes(_atlas(7))


@pytest.mark.slow
def test_count_at_eight():
    assert len(enumerate_tricyclic(8)) == EXPECTED_COUNTS[8]


def test_matches_naive_oracle_at_five():
    assert _codes(enumerate_tricyclic(5)) == _codes(enumerate_tricyclic_naive(5))


@pytest.mark.slow
def test_matches_naive_oracle_at_six():
    assert _codes(enumerate_tricyclic(6)) == _codes(enumerate_tricyclic_naive(6))


def test_parallel_run_is_identical():
    assert _codes(enumerate_tricyclic(6, jobs=2)) == _codes(enumerate_tricyclic(6))


def test_order_limits():
    with pytest.raises(EnumerationRangeError):
        enumerate_tricyclic(3)
    with pytest.raises(EnumerationRangeError):
        enumerate_tricyclic(10, allow_expensive=True)
    with pytest.raises(EnumerationRangeError):
        enumerate_tricyclic(9)
    with pytest.raises(EnumerationRangeError):
        enumerate_tricyclic_naive(7)


def test_run_enumeration_splits_classes():
    run = run_enumeration(6)
    assert run.total == 22
    assert sum(run.counts.values()) == 22
    assert run.counts[3] == 0
    assert run.registry == sorted(run.registry)
    assert run.counts[4] == len(enumerate_class(6, 4))


def test_classes_at_minimum_orders():
    assert run_enumeration(5).counts == {3: 0, 4: 0, 6: 2, 7: 2}
    assert [tricyclic_class(g) for g in enumerate_class(6, 4)] == [4] * run_enumeration(6).counts[4]
