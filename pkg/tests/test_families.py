"""Tests for the named graphs and border matrices."""

import pytest

from qspectra.errors import FamilyError
from qspectra.families import (
    BASE_IDS,
    FAMILY_IDS,
    MIN_ORDER,
    attach_pendants,
    base_anchors,
    build_A,
    build_family,
    build_H,
    build_S,
)
from qspectra.graphs.canonical import are_isomorphic
from qspectra.graphs.graph import base, complete_graph, count_simple_cycles, is_tricyclic, tricyclic_class
from qspectra.linalg.exact import signless_laplacian
from qspectra.schemas.cli import FamilySpec


@pytest.mark.parametrize("j", [3, 4, 6, 7])
def test_h_families_are_tricyclic_of_their_class(j):
    for n in range(MIN_ORDER[j], 11):
        graph = build_H(j, n)
        assert graph.n == n
        assert is_tricyclic(graph)
        assert tricyclic_class(graph) == j
        # every pendant hangs from the hub
        assert graph.degree(0) == build_A(j, 1).degree(0) + n - build_A(j, 1).n


def test_h7_at_minimum_is_k4():
    assert build_H(7, 4) == complete_graph(4)


@pytest.mark.parametrize("j, i", BASE_IDS)
def test_bases_are_their_own_base(j, i):
    graph = build_A(j, i)
    assert is_tricyclic(graph)
    assert count_simple_cycles(graph) == j
    assert base(graph).graph == graph


@pytest.mark.parametrize("j", [3, 4, 6])
def test_alternative_base_differs_from_extremal_base(j):
    assert not are_isomorphic(build_A(j, 1), build_A(j, 2))


def test_anchors_are_vertices_of_the_base():
    for j, i in BASE_IDS:
        graph = build_A(j, i)
        anchors = base_anchors(j, i)
        assert anchors["z"] == 0
        assert all(0 <= v < graph.n for v in anchors.values())
    anchors = base_anchors(6, 2)
    assert build_A(6, 2).has_edge(anchors["u"], anchors["v"])


def test_invalid_requests():
    with pytest.raises(FamilyError):
        build_H(3, 6)
    with pytest.raises(FamilyError):
        build_H(5, 9)
    with pytest.raises(FamilyError):
        build_A(7, 2)
    with pytest.raises(FamilyError):
        build_S(4)


def test_border_matrix_is_hub_deleted_q():
    s6 = build_S(6)
    assert s6.order == 4
    q = signless_laplacian(build_H(6, 5))
    assert s6.rows == tuple(row[1:] for row in q.rows[1:])


def test_attach_pendants():
    graph = attach_pendants(complete_graph(3), 1, 2)
    assert graph.n == 5
    assert graph.neighbors(1) == {0, 2, 3, 4}


def test_build_family_dispatch():
    assert build_family(FamilySpec(family_id="H7", n=4)) == complete_graph(4)
    assert build_family(FamilySpec(family_id="A6_2")) == build_A(6, 2)
    with pytest.raises(FamilyError):
        build_family(FamilySpec(family_id="H6"))
    assert set(FAMILY_IDS) >= {"H3", "H4", "H6", "H7", "A7_1"}
