"""
Semi-Edge Walks

A semi-edge walk of length k is an alternating sequence v_1, e_1, ..., e_k,
v_{k+1} where v_i and v_{i+1} are end-vertices, not necessarily distinct, of
the edge e_i. The number of such walks from x to y is the (x, y) entry of Q^k.

This module counts them explicitly (small graphs only), reads them off exact
matrix powers, compares walk counts of two rooted graphs up to a horizon, and
builds the transfer construction that moves neighbors from one vertex to
another.
"""

import logging
from dataclasses import dataclass

import numpy as np

from qspectra.errors import InvalidGraphError, TransferError, WalkGuardError
from qspectra.graphs.graph import add_edges
from qspectra.linalg.exact import IntSymMatrix, matrix_power, signless_laplacian
from qspectra.schemas.spectra import DominanceVerdict, TransferCheck

logger = logging.getLogger(__name__)

MAX_WALK_LENGTH = 10
MAX_WALK_ORDER = 10


def default_horizon(graph):
    """2n + 8, the horizon used for finite dominance checks."""
    return 2 * graph.n + 8


def _check_vertex(graph, v):
    if not (isinstance(v, int) and 0 <= v < graph.n):
        raise InvalidGraphError(f"vertex {v!r} out of range for n={graph.n}")


def _check_guard(graph, k):
    if k < 0:
        raise ValueError(f"walk length must be >= 0, got {k}")
    if k > MAX_WALK_LENGTH or graph.n > MAX_WALK_ORDER:
        raise WalkGuardError(
            f"explicit walk enumeration is limited to k <= {MAX_WALK_LENGTH} and "
            f"n <= {MAX_WALK_ORDER} (got k={k}, n={graph.n}); use walk_table instead"
        )


def semi_edge_walks(graph, k, x):
    """
    Generate every semi-edge walk of length k starting at x.

    Each walk is a tuple (v_1, e_1, v_2, ..., e_k, v_{k+1}) with edges written
    as (min, max) pairs.

    Raises:
        WalkGuardError: if k or n exceed the explicit enumeration limits
    """
    _check_guard(graph, k)
    _check_vertex(graph, x)
    adjacency = graph.adjacency
    walk = [x]

    def extend(v, remaining):
        if remaining == 0:
            yield tuple(walk)
            return
        for w in sorted(adjacency[v]):
            edge = (v, w) if v < w else (w, v)
            for nxt in (v, w):
                walk.append(edge)
                walk.append(nxt)
                yield from extend(nxt, remaining - 1)
                del walk[-2:]

    yield from extend(x, k)


def enumerate_walk_counts(graph, k, x):
    """
    Count semi-edge walks of length k from x to every endpoint by explicit
    backtracking over edge choices. Independent of any matrix arithmetic.

    Returns:
        List where entry y is |SW_k(G; x, y)|

    Raises:
        WalkGuardError: if k or n exceed the explicit enumeration limits
    """
    _check_guard(graph, k)
    _check_vertex(graph, x)
    adjacency = graph.adjacency
    counts = [0] * graph.n

    def extend(v, remaining):
        if remaining == 0:
            counts[v] += 1
            return
        for w in adjacency[v]:
            # stay at v through edge vw, or cross it to w
            extend(v, remaining - 1)
            extend(w, remaining - 1)

    extend(x, k)
    return counts


def enumerate_walks(graph, k, x, y):
    """|SW_k(G; x, y)| by explicit enumeration."""
    _check_vertex(graph, y)
    return enumerate_walk_counts(graph, k, x)[y]


@dataclass(frozen=True)
class WalkTable:
    """Exact counts |SW_k(G; x, y)| for every pair of endpoints."""
    k: int
    counts: IntSymMatrix

    def __getitem__(self, index):
        return self.counts[index]

    @property
    def trace(self):
        return self.counts.trace()


def walk_table(graph, k):
    """Walk counts of length k read off the exact k-th power of Q."""
    return WalkTable(k, matrix_power(signless_laplacian(graph), k))


def walk_count_sequence(graph, x, y, horizon):
    """
    |SW_k(G; x, y)| for k = 0..horizon.

    Iterates Q on the indicator vector of y, so only one column of each power
    is ever formed.
    """
    _check_vertex(graph, x)
    _check_vertex(graph, y)
    q = signless_laplacian(graph).to_object_array()
    column = np.zeros(graph.n, dtype=object)
    column[y] = 1
    counts = []
    for _ in range(horizon + 1):
        counts.append(int(column[x]))
        column = q @ column
    return counts


def check_dominance(g, x, y, h, u, v, horizon):
    """
    Compare (G; x, y) against (H; u, v) for walk lengths 0..horizon.

    The verdict is "dominates" when no count of G exceeds the matching count of
    H, "strictly-dominates" when additionally some count is smaller, and
    "incomparable" at the first length where G has more walks.

    Args:
        g, x, y: left rooted graph; x = y compares closed walks
        h, u, v: right rooted graph
        horizon: largest walk length compared, >= 1

    Returns:
        DominanceVerdict (a statement about k <= horizon only)
    """
    if horizon < 1:
        raise ValueError(f"dominance horizon must be >= 1, got {horizon}")

    left = walk_count_sequence(g, x, y, horizon)
    right = walk_count_sequence(h, u, v, horizon)

    first_strict = next((k for k in range(horizon + 1) if left[k] < right[k]), None)
    first_violation = next((k for k in range(horizon + 1) if left[k] > right[k]), None)

    if first_violation is not None:
        outcome = "incomparable"
    elif first_strict is not None:
        outcome = "strictly-dominates"
    else:
        outcome = "dominates"

    return DominanceVerdict(
        horizon=horizon,
        outcome=outcome,
        first_strict_k=first_strict,
        first_violation_k=first_violation,
        left_counts=left,
        right_counts=right,
    )


def apply_transfer(graph, donor, receiver, moved):
    """
    Build the two graphs of a transfer over the route `graph`.

    Args:
        graph: the transfer route G
        donor: vertex v that keeps the moved neighbors in G_v
        receiver: vertex u that receives them in G_u
        moved: vertices w_1..w_r

    Returns:
        (G_v, G_u) with G_v = G + {v w_i} and G_u = G + {u w_i}

    Raises:
        TransferError: if some w_i is an endpoint, out of range, or already
            adjacent to v or u in G
    """
    _check_vertex(graph, donor)
    _check_vertex(graph, receiver)
    if donor == receiver:
        raise TransferError("donor and receiver must differ", donor)

    moved = sorted(set(moved))
    for w in moved:
        if not (isinstance(w, int) and 0 <= w < graph.n):
            raise TransferError(f"moved vertex {w!r} out of range for n={graph.n}", w)
        if w in (donor, receiver):
            raise TransferError(f"moved vertex {w} is the donor or the receiver", w)
        if graph.has_edge(donor, w):
            raise TransferError(f"edge {donor}-{w} already in the transfer route", w)
        if graph.has_edge(receiver, w):
            raise TransferError(f"edge {receiver}-{w} already in the transfer route", w)

    g_v = add_edges(graph, [(donor, w) for w in moved])
    g_u = add_edges(graph, [(receiver, w) for w in moved])
    return g_v, g_u


def check_transfer_hypotheses(graph, donor, receiver, moved, horizon=None):
    """
    Evaluate the transfer hypotheses on the route `graph` up to `horizon`:
    (G; v) strictly dominated by (G; u), and (G; w, v) dominated by (G; w, u)
    for each moved w.

    Returns:
        TransferCheck
    """
    if horizon is None:
        horizon = default_horizon(graph)
    moved = sorted(set(moved))
    closed = check_dominance(graph, donor, donor, graph, receiver, receiver, horizon)
    paths = [check_dominance(graph, w, donor, graph, w, receiver, horizon) for w in moved]
    check = TransferCheck(
        donor=donor, receiver=receiver, moved=moved, horizon=horizon, closed=closed, paths=paths
    )
    logger.debug(
        f"Transfer {donor}->{receiver} of {moved}: closed={closed.outcome}, holds={check.holds}"
    )
    return check
