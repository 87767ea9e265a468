"""Tests for the graph representation and structural queries."""

import random

import networkx as nx
import pytest

from qspectra.errors import InvalidGraphError
from qspectra.families import BASE_IDS, build_A, build_H
from qspectra.graphs.graph import (
    Graph,
    add_edges,
    base,
    complete_graph,
    count_simple_cycles,
    cycle_graph,
    cyclomatic_number,
    degrees,
    empty_graph,
    induced_subgraph,
    is_connected,
    is_tricyclic,
    path_graph,
    pendent_vertices,
    relabel,
    remove_edges,
    simple_cycles,
    star_graph,
    triangles,
    tricyclic_class,
)
from qspectra.search.enumeration import enumerate_tricyclic
from tests.conftest import random_graphs


def test_graph_rejects_loops_and_out_of_range():
    with pytest.raises(InvalidGraphError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(InvalidGraphError):
        Graph.from_edges(3, [(0, 3)])


def test_graph_rejects_parallel_edges():
    with pytest.raises(InvalidGraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_edges_are_normalized():
    g = Graph.from_edges(3, [(2, 0), (1, 2)])
    assert g.sorted_edges() == [(0, 2), (1, 2)]
    assert g.has_edge(0, 2) and g.has_edge(2, 0)
    assert g.degree(2) == 2


def test_cyclomatic_number():
    assert cyclomatic_number(path_graph(3)) == 0
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert cyclomatic_number(two_triangles) == 2
    assert cyclomatic_number(complete_graph(4)) == 3


def test_is_tricyclic():
    assert is_tricyclic(complete_graph(4))
    assert not is_tricyclic(cycle_graph(5))
    # K_4 next to a triangle: m = n + 2 but two components
    disconnected = add_edges(Graph(7, complete_graph(4).edges), [(4, 5), (5, 6), (4, 6)])
    assert disconnected.m == disconnected.n + 2
    assert not is_tricyclic(disconnected)


def test_count_simple_cycles_examples():
    assert count_simple_cycles(complete_graph(4)) == 7
    assert count_simple_cycles(complete_graph(3)) == 1
    assert count_simple_cycles(build_A(6, 1)) == 6
    assert count_simple_cycles(path_graph(5)) == 0


def test_simple_cycles_match_networkx():
    for graph in random_graphs(40, 3, 7, seed=11):
        expected = sum(1 for c in nx.simple_cycles(graph.to_networkx()) if len(c) >= 3)
        assert count_simple_cycles(graph) == expected


def test_simple_cycles_reported_once():
    cycles = simple_cycles(complete_graph(4))
    assert len(set(cycles)) == len(cycles)
    for cycle in cycles:
        assert cycle[0] == min(cycle)
        assert cycle[1] < cycle[-1]


def test_pendent_vertices():
    assert pendent_vertices(star_graph(3)) == {1, 2, 3}
    assert pendent_vertices(cycle_graph(4)) == frozenset()
    assert pendent_vertices(build_H(7, 6)) == {4, 5}


def test_base_strips_trees():
    graph = build_H(3, 9)
    core = base(graph)
    assert core.graph.n == 7
    assert core.index_map == tuple(range(7))
    # a pendant path hanging off the triangle disappears as well
    tadpole = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    assert base(tadpole).index_map == (0, 1, 2)


def test_base_of_forest_is_an_error():
    with pytest.raises(InvalidGraphError):
        base(path_graph(4))


def test_base_index_map_round_trips():
    core = base(Graph.from_edges(5, [(4, 1), (1, 2), (2, 4), (0, 1), (3, 0)]))
    assert core.index_map == (1, 2, 4)
    assert core.original(core.local(4)) == 4


def test_tricyclic_class_examples():
    assert tricyclic_class(build_H(3, 9)) == 3
    assert tricyclic_class(build_H(4, 8)) == 4
    assert tricyclic_class(build_H(6, 5)) == 6
    assert tricyclic_class(complete_graph(4)) == 7


def test_tricyclic_class_rejects_non_tricyclic():
    with pytest.raises(InvalidGraphError):
        tricyclic_class(cycle_graph(5))


def test_triangles():
    assert triangles(complete_graph(4)) == 4
    assert triangles(cycle_graph(5)) == 0


def test_relabel_and_edge_edits():
    g = path_graph(3)
    assert relabel(g, [2, 1, 0]).sorted_edges() == [(0, 1), (1, 2)]
    with pytest.raises(InvalidGraphError):
        relabel(g, [0, 0, 1])
    with pytest.raises(InvalidGraphError):
        add_edges(g, [(0, 1)])
    with pytest.raises(InvalidGraphError):
        remove_edges(g, [(0, 2)])
    assert remove_edges(add_edges(g, [(0, 2)]), [(0, 2)]) == g


def test_induced_subgraph():
    sub, index_map = induced_subgraph(complete_graph(5), [4, 1, 3])
    assert index_map == (1, 3, 4)
    assert sub == complete_graph(3)


def test_empty_graph_is_not_connected():
    assert not is_connected(empty_graph(0))
    assert is_connected(empty_graph(1))


def _with_random_trees(graph, extra, rng):
    edges = set(graph.edges)
    for new in range(graph.n, graph.n + extra):
        edges.add((rng.randrange(new), new))
    return Graph(graph.n + extra, frozenset(edges))


def _tricyclic_sample():
    rng = random.Random(14)
    grown = [
        _with_random_trees(build_A(j, i), rng.randint(1, 5), rng)
        for j, i in BASE_IDS
        for _ in range(5)
    ]
    return enumerate_tricyclic(6) + grown


def test_degree_sum_is_twice_the_edge_count():
    for graph in random_graphs(100, 1, 12, seed=12) + _tricyclic_sample():
        assert sum(degrees(graph)) == 2 * graph.m


def test_base_is_idempotent():
    graphs = [g for g in random_graphs(80, 3, 10, seed=13) if cyclomatic_number(g) > 0]
    for graph in graphs + _tricyclic_sample():
        core = base(graph).graph
        again = base(core)
        assert again.graph == core
        assert again.index_map == tuple(range(core.n))


def test_pendant_trees_add_no_cycles():
    for graph in _tricyclic_sample():
        assert is_tricyclic(graph)
        cycles = count_simple_cycles(graph)
        assert cycles == count_simple_cycles(base(graph).graph)
        assert cycles in (3, 4, 6, 7)
