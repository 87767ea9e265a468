"""
Named Graphs and Matrices

Constructors for the extremal tricyclic graphs H_j^n, the candidate bases
A_i^j and the border matrices S_6, S_7.

Labeling is fixed: the hub z is vertex 0, the remaining base vertices come
next, and pendent vertices are appended last, all attached to the hub. For
j in {6, 7} this is the u_1..u_n / v_1..v_n labeling with u_i (v_i) = i - 1.
"""

import logging

from qspectra.errors import FamilyError
from qspectra.graphs.graph import Graph, complete_graph
from qspectra.linalg.exact import signless_laplacian

logger = logging.getLogger(__name__)

MIN_ORDER = {3: 7, 4: 6, 6: 5, 7: 4}

_BASES = {
    # three triangles sharing the hub (friendship graph F_3)
    (3, 1): (7, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4), (0, 5), (5, 6), (0, 6)]),
    (3, 2): (7, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4), (1, 5), (5, 6), (1, 6)]),
    # 4-cycle 0-1-2-3 with chord 0-2, plus a triangle on the hub
    (4, 1): (6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (0, 4), (4, 5), (0, 5)]),
    (4, 2): (6, [(1, 3), (2, 3), (0, 2), (0, 1), (1, 2), (0, 4), (4, 5), (0, 5)]),
    # K_{2,3} with hubs 0 and 1, plus the hub-hub edge
    (6, 1): (5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    (6, 2): (5, [(0, 2), (0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4)]),
}

_ANCHORS = {
    (3, 1): {"z": 0, "x": 1, "y": 3},
    (3, 2): {"z": 0, "u": 1, "v": 2},
    (4, 1): {"z": 0, "x": 1, "y": 4},
    (4, 2): {"z": 0, "u": 1, "v": 2},
    (6, 1): {"z": 0},
    (6, 2): {"z": 0, "u": 1, "v": 2},
    (7, 1): {"z": 0},
}

BASE_IDS = tuple(sorted(_ANCHORS))

H_FAMILIES = {"H3": 3, "H4": 4, "H6": 6, "H7": 7}
A_FAMILIES = {f"A{j}_{i}": (j, i) for j, i in BASE_IDS}
FAMILY_IDS = tuple(H_FAMILIES) + tuple(A_FAMILIES)


def _check_base_id(j, i):
    if (j, i) not in _ANCHORS:
        raise FamilyError(f"no candidate base A_{i}^{j}; valid (j, i) pairs are {list(BASE_IDS)}")


def build_A(j, i):
    """
    Candidate base A_i^j.

    Raises:
        FamilyError: for a pair outside (3,1) (3,2) (4,1) (4,2) (6,1) (6,2) (7,1)
    """
    _check_base_id(j, i)
    if (j, i) == (7, 1):
        return complete_graph(4)
    n, edges = _BASES[(j, i)]
    return Graph.from_edges(n, edges)


def base_anchors(j, i):
    """Named vertices of A_i^j: hub z, and x, y or u, v where the base has them."""
    _check_base_id(j, i)
    return dict(_ANCHORS[(j, i)])


def attach_pendants(graph, vertex, count):
    """Append `count` new vertices, each adjacent only to `vertex`."""
    n = graph.n
    edges = set(graph.edges)
    edges.update((vertex, n + p) for p in range(count))
    return Graph(n + count, frozenset(edges))


def build_H(j, n):
    """
    The extremal graph H_j^n: A_1^j with n - |V(A_1^j)| pendants on the hub.

    Raises:
        FamilyError: if j is not a tricyclic class or n < MIN_ORDER[j]
    """
    if j not in MIN_ORDER:
        raise FamilyError(f"unknown tricyclic class {j}; expected one of {sorted(MIN_ORDER)}")
    if n < MIN_ORDER[j]:
        raise FamilyError(f"H_{j}^n needs n >= {MIN_ORDER[j]}, got n={n}")
    base = build_A(j, 1)
    return attach_pendants(base, 0, n - base.n)


def build_S(j):
    """
    S_j: Q(H_j^5) with the hub's row and column removed.

    Raises:
        FamilyError: unless j is 6 or 7
    """
    if j not in (6, 7):
        raise FamilyError(f"S_j is defined for j in (6, 7), got {j}")
    return signless_laplacian(build_H(j, 5)).delete(0)


def build_family(spec):
    """
    Build the graph named by a FamilySpec.

    Raises:
        FamilyError: for an unknown id or a missing/too small n on an H family
    """
    if spec.family_id in H_FAMILIES:
        if spec.n is None:
            raise FamilyError(f"family {spec.family_id} needs n")
        graph = build_H(H_FAMILIES[spec.family_id], spec.n)
    elif spec.family_id in A_FAMILIES:
        graph = build_A(*A_FAMILIES[spec.family_id])
    else:
        raise FamilyError(f"unknown family {spec.family_id!r}; expected one of {list(FAMILY_IDS)}")
    logger.debug(f"Built {spec.family_id} with n={graph.n}, m={graph.m}")
    return graph
