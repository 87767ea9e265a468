"""Tests for semi-edge walk counting, dominance and transfers."""

import pytest

from qspectra.config import DEFAULT_TOL
from qspectra.errors import InvalidGraphError, TransferError, WalkGuardError
from qspectra.graphs.graph import Graph, complete_graph, path_graph, star_graph
from qspectra.linalg.exact import IntSymMatrix, signless_laplacian
from qspectra.linalg.spectral import slee
from qspectra.walks import (
    apply_transfer,
    check_dominance,
    check_transfer_hypotheses,
    default_horizon,
    enumerate_walk_counts,
    enumerate_walks,
    semi_edge_walks,
    walk_count_sequence,
    walk_table,
)
from tests.conftest import random_graphs


def _agrees_with_matrix_powers(graphs, max_k):
    for graph in graphs:
        for k in range(max_k + 1):
            table = walk_table(graph, k)
            for x in range(graph.n):
                counts = enumerate_walk_counts(graph, k, x)
                assert counts == [table[x, y] for y in range(graph.n)]


def test_enumerated_counts_match_matrix_powers():
    _agrees_with_matrix_powers(random_graphs(30, 1, 6, seed=41), 5)


@pytest.mark.slow
def test_enumerated_counts_match_matrix_powers_large_sample():
    _agrees_with_matrix_powers(random_graphs(200, 1, 6, seed=42), 5)


def test_explicit_walks_are_well_formed(k3):
    walks = list(semi_edge_walks(k3, 3, 0))
    assert len(walks) == sum(enumerate_walk_counts(k3, 3, 0))
    assert len(set(walks)) == len(walks)
    for walk in walks:
        assert len(walk) == 7
        for i in range(0, 6, 2):
            vertex, edge, nxt = walk[i], walk[i + 1], walk[i + 2]
            assert vertex in edge and nxt in edge


def test_k2_examples(k2):
    assert enumerate_walks(k2, 1, 0, 0) == 1
    assert enumerate_walks(k2, 2, 0, 0) == 2
    assert enumerate_walks(k2, 2, 0, 1) == 2


def test_length_one_counts_degree():
    for graph in random_graphs(10, 2, 7, seed=43):
        for x in range(graph.n):
            assert enumerate_walks(graph, 1, x, x) == graph.degree(x)


def test_walk_table_small_lengths(k3):
    assert walk_table(k3, 0).counts == IntSymMatrix.identity(3)
    assert walk_table(k3, 1).counts == signless_laplacian(k3)
    assert walk_table(k3, 3).trace == 66


def test_walk_count_sequence_matches_table():
    graph = complete_graph(4)
    sequence = walk_count_sequence(graph, 0, 2, 6)
    assert sequence == [walk_table(graph, k)[0, 2] for k in range(7)]


def test_guard_refuses_large_instances(k3):
    with pytest.raises(WalkGuardError, match="walk_table"):
        enumerate_walk_counts(k3, 11, 0)
    with pytest.raises(WalkGuardError):
        enumerate_walk_counts(path_graph(11), 2, 0)
    with pytest.raises(InvalidGraphError):
        enumerate_walks(k3, 2, 0, 5)


def test_dominance_is_reflexive_and_never_strict(k3):
    verdict = check_dominance(k3, 1, 1, k3, 1, 1, 8)
    assert verdict.outcome == "dominates"
    assert verdict.first_strict_k is None


def test_leaf_is_strictly_dominated_by_center():
    star = star_graph(3)
    verdict = check_dominance(star, 1, 1, star, 0, 0, 8)
    assert verdict.outcome == "strictly-dominates"
    assert verdict.first_strict_k == 1
    reverse = check_dominance(star, 0, 0, star, 1, 1, 8)
    assert reverse.outcome == "incomparable"
    assert reverse.first_violation_k == 1


def test_dominance_needs_positive_horizon(k3):
    with pytest.raises(ValueError):
        check_dominance(k3, 0, 0, k3, 1, 1, 0)


def _check_nested_neighborhoods(graphs):
    pairs = 0
    for graph in graphs:
        horizon = default_horizon(graph)
        for v in range(graph.n):
            for u in range(graph.n):
                if u == v or not graph.neighbors(v) <= graph.neighbors(u) | {u}:
                    continue
                pairs += 1
                closed = check_dominance(graph, v, v, graph, u, u, horizon)
                assert closed.holds
                if graph.degree(v) < graph.degree(u):
                    assert closed.first_strict_k == 1
                for w in range(graph.n):
                    if w != v:
                        assert check_dominance(graph, w, v, graph, w, u, horizon).holds
    assert pairs > 0


def test_nested_neighborhoods_give_dominance():
    _check_nested_neighborhoods(random_graphs(40, 2, 8, seed=44))


@pytest.mark.slow
def test_nested_neighborhoods_give_dominance_large_sample():
    _check_nested_neighborhoods(random_graphs(200, 2, 8, seed=45))


def _route():
    # star on 0 with leaves 1, 2, 3 and vertex 4 hanging from 2
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (2, 4)])


def test_apply_transfer_builds_both_graphs():
    g_v, g_u = apply_transfer(_route(), 1, 0, [4])
    assert g_v.has_edge(1, 4) and not g_v.has_edge(0, 4)
    assert g_u.has_edge(0, 4) and not g_u.has_edge(1, 4)
    assert g_v.m == g_u.m == 5


def test_empty_transfer_changes_nothing():
    route = _route()
    assert apply_transfer(route, 1, 0, []) == (route, route)


@pytest.mark.parametrize("moved, offending", [([2], 2), ([1], 1), ([9], 9), ([3, 4], 3)])
def test_transfer_errors_name_the_vertex(moved, offending):
    # 2 and 3 are already adjacent to the receiver, 1 is the donor, 9 is out of range
    with pytest.raises(TransferError) as info:
        apply_transfer(_route(), 1, 0, moved)
    assert info.value.vertex == offending


def test_transfer_hypotheses_and_slee_increase():
    route = _route()
    check = check_transfer_hypotheses(route, 1, 0, [4])
    assert check.horizon == default_horizon(route)
    assert check.holds
    g_v, g_u = apply_transfer(route, 1, 0, [4])
    assert slee(g_u).value - slee(g_v).value > 10 * DEFAULT_TOL


def test_transfer_hypotheses_fail_in_the_wrong_direction():
    check = check_transfer_hypotheses(_route(), 0, 1, [4], horizon=6)
    assert not check.holds
    assert check.closed.outcome == "incomparable"
