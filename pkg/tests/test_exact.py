"""Tests for exact integer linear algebra."""

import networkx as nx
import pytest

from qspectra.errors import InvalidMatrixError
from qspectra.families import build_H, build_S
from qspectra.graphs.graph import Graph, complete_graph, connected_components, degrees, empty_graph, path_graph, triangles
from qspectra.linalg.exact import (
    CharPoly,
    IntSymMatrix,
    adjacency,
    are_q_cospectral,
    char_poly,
    char_poly_bareiss,
    matrix_power,
    moment_sequence,
    newton_power_sums,
    signless_laplacian,
    spectral_moment,
)
from tests.conftest import random_graphs, random_relabeling

QUINTIC = (48, -148, 152, -69, 14, -1)
QUARTIC = (20, -44, 33, -10, 1)


def test_signless_laplacian_small_graphs(k2, k3):
    assert signless_laplacian(k2).rows == ((1, 1), (1, 1))
    assert signless_laplacian(k3).rows == ((2, 1, 1), (1, 2, 1), (1, 1, 2))
    assert signless_laplacian(empty_graph(3)).rows == ((0, 0, 0),) * 3


def test_adjacency_small_graphs(k2):
    assert adjacency(k2).rows == ((0, 1), (1, 0))
    assert adjacency(empty_graph(2)).rows == ((0, 0), (0, 0))


def test_matrix_validation():
    with pytest.raises(InvalidMatrixError):
        IntSymMatrix(((0, 1), (2, 0)))
    with pytest.raises(InvalidMatrixError):
        IntSymMatrix(((0.5, 0), (0, 0)))
    with pytest.raises(InvalidMatrixError):
        IntSymMatrix(((0, 1),))


def test_spectral_moment_examples(k3):
    assert spectral_moment(k3, 3) == 66
    assert spectral_moment(build_H(6, 5), 2) == 58
    with pytest.raises(ValueError):
        spectral_moment(k3, -1)


def test_matrix_power_identity_and_first_power(k3):
    q = signless_laplacian(k3)
    assert matrix_power(q, 0) == IntSymMatrix.identity(3)
    assert matrix_power(q, 1) == q


def test_moment_identities():
    for graph in random_graphs(500, 1, 8, seed=21):
        t = moment_sequence(graph, 3)
        d = degrees(graph)
        m = graph.m
        assert t[0] == graph.n
        assert t[1] == 2 * m
        assert t[2] == sum(x * x for x in d) + 2 * m
        assert t[3] == sum(x ** 3 for x in d) + 3 * sum(x * x for x in d) + 6 * triangles(graph)


def test_moments_are_isomorphism_invariant(rng):
    for graph in random_graphs(20, 2, 8, seed=22):
        assert moment_sequence(graph, 6) == moment_sequence(random_relabeling(graph, rng), 6)


def test_quintic_and_quartic():
    assert char_poly(signless_laplacian(build_H(6, 5))).coefficients == QUINTIC
    assert char_poly(signless_laplacian(build_H(7, 5))).coefficients == QUINTIC
    assert char_poly(build_S(6)).coefficients == QUARTIC
    assert char_poly(build_S(7)).coefficients == QUARTIC


def test_char_poly_of_identity():
    poly = char_poly(IntSymMatrix.identity(2))
    assert poly.coefficients == (1, -2, 1)
    assert str(poly) == "x^2 - 2*x + 1"
    assert poly(1) == 0


def test_char_poly_matches_bareiss():
    for graph in random_graphs(30, 1, 8, seed=23):
        q = signless_laplacian(graph)
        assert char_poly(q) == char_poly_bareiss(q)


def test_char_poly_endpoints():
    for graph in random_graphs(30, 1, 9, seed=24):
        poly = char_poly(signless_laplacian(graph))
        assert poly.degree == graph.n
        assert poly.coefficients[-1] == (-1) ** graph.n
        assert poly.coefficients[-2] == (-1) ** (graph.n - 1) * 2 * graph.m


def test_constant_vanishes_iff_some_component_is_bipartite():
    non_bipartite = 0
    for graph in random_graphs(60, 1, 8, seed=25):
        nx_graph = graph.to_networkx()
        bipartite = any(
            nx.is_bipartite(nx_graph.subgraph(component)) for component in connected_components(graph)
        )
        assert (char_poly(signless_laplacian(graph)).constant == 0) == bipartite
        non_bipartite += not bipartite
    assert non_bipartite > 0


def test_newton_power_sums_match_moments():
    for graph in random_graphs(30, 1, 7, seed=26):
        poly = char_poly(signless_laplacian(graph))
        assert newton_power_sums(poly, 10) == moment_sequence(graph, 10).moments


def test_q_cospectral_examples(k3, p3):
    assert are_q_cospectral(build_H(6, 5), build_H(7, 5))
    assert are_q_cospectral(k3, Graph.from_edges(3, [(2, 0), (0, 1), (1, 2)]))
    assert not are_q_cospectral(k3, p3)
    assert not are_q_cospectral(k3, complete_graph(4))


def test_large_coefficients_serialize_as_strings():
    poly = CharPoly(coefficients=(2 ** 60, -3, 1))
    dumped = poly.model_dump(mode="json")["coefficients"]
    assert dumped == [str(2 ** 60), -3, 1]
    assert CharPoly.model_validate({"coefficients": dumped}) == poly


def test_exact_powers_do_not_overflow():
    q = signless_laplacian(complete_graph(8))
    # Q(K_8) has eigenvalues 14 and 6 (x7)
    assert matrix_power(q, 30).trace() == 14 ** 30 + 7 * 6 ** 30
    assert moment_sequence(path_graph(1), 3).moments == [1, 0, 0, 0]
