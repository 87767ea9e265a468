"""Tests for canonical forms, checked against the permutation oracle."""

import itertools
import random

import pytest

from qspectra.errors import InvalidGraphError
from qspectra.families import build_A, build_H
from qspectra.graphs.canonical import (
    are_isomorphic,
    are_isomorphic_brute_force,
    brute_force_canonical_bits,
    canonical_form,
    canonical_graph,
)
from qspectra.graphs.graph import Graph, complete_graph, cycle_graph
from tests.conftest import random_graphs, random_relabeling


def test_k4_under_any_labeling(rng):
    reference = canonical_form(complete_graph(4))
    for _ in range(5):
        assert canonical_form(random_relabeling(complete_graph(4), rng)) == reference


def test_hexagon_vs_linked_triangles():
    linked = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    hexagon = cycle_graph(6)
    assert canonical_form(hexagon) != canonical_form(linked)
    assert not are_isomorphic(hexagon, Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))


def test_form_is_invariant_under_relabeling(rng):
    for graph in random_graphs(60, 2, 10, seed=5):
        form = canonical_form(graph)
        assert canonical_form(random_relabeling(graph, rng)) == form


def test_canonical_graph_matches_form_bits():
    for graph in random_graphs(20, 2, 9, seed=6):
        form = canonical_form(graph)
        assert canonical_graph(graph) == form.graph()


def test_equal_forms_iff_isomorphic_against_oracle():
    rng = random.Random(7)
    graphs = random_graphs(30, 5, 6, seed=8)
    # add relabeled copies so that both outcomes occur
    graphs += [random_relabeling(g, rng) for g in graphs[:10]]
    for g, h in itertools.combinations(graphs, 2):
        if g.n != h.n:
            continue
        assert (canonical_form(g) == canonical_form(h)) == are_isomorphic_brute_force(g, h)


def test_bits_are_the_minimum_over_all_orders():
    graphs = random_graphs(40, 1, 7, seed=9) + [build_A(j, i) for j, i in [(3, 1), (4, 2), (6, 1), (7, 1)]]
    for graph in graphs:
        assert canonical_form(graph).bits == brute_force_canonical_bits(graph)


def test_minimum_holds_for_graphs_with_twins():
    star = Graph.from_edges(7, [(0, v) for v in range(1, 7)])
    assert canonical_form(star).bits == brute_force_canonical_bits(star)
    assert canonical_form(complete_graph(7)).bits == "1" * 21
    assert canonical_form(build_H(6, 7)).bits == brute_force_canonical_bits(build_H(6, 7))


def test_family_members_are_pairwise_distinct():
    graphs = [build_A(j, i) for j, i in [(3, 1), (3, 2)]] + [build_H(j, 8) for j in (3, 4, 6, 7)]
    forms = {canonical_form(g) for g in graphs}
    assert len(forms) == len(graphs)


def test_size_limits():
    with pytest.raises(InvalidGraphError):
        canonical_form(Graph(17, frozenset()))
    with pytest.raises(InvalidGraphError):
        brute_force_canonical_bits(Graph(9, frozenset()))


def test_empty_graph():
    assert canonical_form(Graph(0, frozenset())).bits == ""
