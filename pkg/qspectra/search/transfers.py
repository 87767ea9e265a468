"""
Transfer Experiments

Empirical checks of the transfer construction: on random transfer routes
whose walk-dominance hypotheses hold up to the default horizon, moving
neighbors from the donor to the receiver must strictly increase SLEE. The
structural moves used to pin down the extremal bases are checked the same
way on concrete tricyclic graphs.
"""

import logging
import random
import time

from qspectra.config import DEFAULT_TOL
from qspectra.families import attach_pendants, base_anchors, build_A, build_H
from qspectra.graphs.canonical import are_isomorphic
from qspectra.graphs.graph import Graph, base, is_tricyclic, random_graph, remove_edges
from qspectra.linalg.spectral import slee, slee_high_precision
from qspectra.schemas.reports import VerificationReport
from qspectra.search.verification import make_witness
from qspectra.utils.formats import to_graph6
from qspectra.walks import apply_transfer, check_transfer_hypotheses, default_horizon

logger = logging.getLogger(__name__)

MIN_ROUTE_ORDER = 4
MAX_ROUTE_ORDER = 8
ATTEMPTS_PER_INSTANCE = 200
HIGH_PRECISION_DPS = 60


def _strictly_increases(g_v, g_u, tol):
    """slee(G_v) < slee(G_u), with a high-precision recheck inside the float margin."""
    low, high = slee(g_v, tol).value, slee(g_u, tol).value
    if high - low > 10 * tol * high:
        return True, low, high
    precise_low = slee_high_precision(g_v, HIGH_PRECISION_DPS)
    precise_high = slee_high_precision(g_u, HIGH_PRECISION_DPS)
    return bool(precise_low < precise_high), low, high


def _random_instance(rng):
    n = rng.randint(MIN_ROUTE_ORDER, MAX_ROUTE_ORDER)
    route = random_graph(n, rng.uniform(0.2, 0.6), seed=rng.randrange(2 ** 31))
    pairs = []
    for v in range(n):
        for u in range(n):
            if u == v:
                continue
            free = [w for w in range(n) if w not in (u, v)
                    and not route.has_edge(v, w) and not route.has_edge(u, w)]
            if free:
                pairs.append((v, u, free))
    if not pairs:
        return None

    # bias half of the draws toward pairs with N(v) inside N(u) + {u}
    nested = [p for p in pairs if route.neighbors(p[0]) <= route.neighbors(p[1]) | {p[1]}]
    v, u, free = rng.choice(nested if nested and rng.random() < 0.5 else pairs)
    moved = rng.sample(free, rng.randint(1, len(free)))
    return route, v, u, sorted(moved)


def verify_transfer_lemma(instances=100, seed=0, tol=DEFAULT_TOL):
    """
    Draw random transfer instances, keep those whose hypotheses hold at
    horizon 2n + 8, and check SLEE(G_v) < SLEE(G_u) on each.

    Returns:
        VerificationReport with claim "transfer"; it fails if any instance
        violates the inequality or too few instances could be drawn
    """
    start = time.perf_counter()
    rng = random.Random(seed)
    checked = 0
    rejected = 0
    smallest_gap = None
    counterexamples = []

    for _ in range(instances * ATTEMPTS_PER_INSTANCE):
        if checked == instances:
            break
        drawn = _random_instance(rng)
        if drawn is None:
            rejected += 1
            continue
        route, v, u, moved = drawn
        hypotheses = check_transfer_hypotheses(route, v, u, moved, default_horizon(route))
        if not hypotheses.holds:
            rejected += 1
            continue

        g_v, g_u = apply_transfer(route, v, u, moved)
        increases, low, high = _strictly_increases(g_v, g_u, tol)
        checked += 1
        if smallest_gap is None or high - low < smallest_gap:
            smallest_gap = high - low
        if not increases:
            logger.error(f"Transfer {v}->{u} of {moved} on {to_graph6(route)} did not increase SLEE")
            counterexamples.append({
                "route": to_graph6(route), "donor": v, "receiver": u, "moved": moved,
                "slee_donor": low, "slee_receiver": high,
            })

    passed = checked == instances and not counterexamples
    if checked < instances:
        logger.warning(f"Only {checked} of {instances} transfer instances satisfied the hypotheses")
    logger.info(f"transfer: {checked} instances checked, {len(counterexamples)} counterexample(s)")
    return VerificationReport(
        claim="transfer",
        params={"instances": instances, "seed": seed},
        passed=passed,
        counterexamples=counterexamples,
        details={"checked": checked, "rejected": rejected, "smallest_gap": smallest_gap},
        elapsed_ms=(time.perf_counter() - start) * 1000.0,
    )


def transfer_neighbors(graph, donor, receiver, moved):
    """
    Move the edges donor-w (w in moved) of `graph` over to receiver.

    Returns:
        (route, G') where route is `graph` without the moved edges and G' has
        them reattached at the receiver
    """
    route = remove_edges(graph, [(donor, w) for w in moved])
    _, moved_graph = apply_transfer(route, donor, receiver, moved)
    return route, moved_graph


def _placements(graph, count):
    """The graph with `count` pendants, all on one vertex, for every vertex."""
    if count == 0:
        return [graph]
    return [attach_pendants(graph, c, count) for c in range(graph.n)]


def base_move_instances(n):
    """
    Concrete structural moves at order n, as (name, graph, donor, receiver, moved).

    * A_2^j to A_1^j (j = 3, 4, 6): N(u) minus {v, z} goes to z, or to v for j = 6.
    * A_1^3 and A_1^4: N(y) minus {z} goes to x.
    * H_j^n with its pendants on x != z instead of z: the pendants go to z.
    * A_1^j with a pendant path z-a-b: b goes from a to z.
    """
    instances = []
    for j in (3, 4, 6):
        a2 = build_A(j, 2)
        if n < a2.n:
            continue
        anchors = base_anchors(j, 2)
        z, u, v = anchors["z"], anchors["u"], anchors["v"]
        receiver = v if j == 6 else z
        for graph in _placements(a2, n - a2.n):
            moved = sorted(
                w for w in graph.neighbors(u) if w not in (v, z) and not graph.has_edge(receiver, w)
            )
            if moved:
                instances.append((f"A{j}_2->A{j}_1", graph, u, receiver, moved))

    for j in (3, 4):
        a1 = build_A(j, 1)
        if n < a1.n:
            continue
        anchors = base_anchors(j, 1)
        z, x, y = anchors["z"], anchors["x"], anchors["y"]
        for graph in _placements(a1, n - a1.n):
            moved = sorted(w for w in graph.neighbors(y) if w != z and not graph.has_edge(x, w))
            if moved:
                instances.append((f"A{j}_1 y->x", graph, y, x, moved))

    for j in (3, 4, 6, 7):
        a1 = build_A(j, 1)
        extra = n - a1.n
        if extra < 1:
            continue
        hub_placement = build_H(j, n)
        for x in range(1, a1.n):
            graph = attach_pendants(a1, x, extra)
            if are_isomorphic(graph, hub_placement):
                continue
            moved = list(range(a1.n, n))
            instances.append((f"H{j} pendants {x}->0", graph, x, 0, moved))

        if extra >= 2:
            path = set(a1.edges) | {(0, a1.n), (a1.n, a1.n + 1)}
            graph = attach_pendants(Graph(a1.n + 2, frozenset(path)), 0, extra - 2)
            instances.append((f"H{j} fold path", graph, a1.n, 0, [a1.n + 1]))
    return instances


def verify_base_moves(n, tol=DEFAULT_TOL):
    """
    Check that every structural move at order n keeps the graph tricyclic,
    satisfies the transfer hypotheses on its route and strictly increases
    SLEE. Moves out of A_2^j must land on a base isomorphic to A_1^j.

    Returns:
        VerificationReport with claim "base-moves"
    """
    start = time.perf_counter()
    witnesses = []
    counterexamples = []
    instances = base_move_instances(n)
    if not instances:
        logger.info(f"No structural moves exist at n={n}")
    for name, graph, donor, receiver, moved in instances:
        route, moved_graph = transfer_neighbors(graph, donor, receiver, moved)
        problems = []
        if not is_tricyclic(moved_graph):
            problems.append("result is not tricyclic")
        hypotheses = check_transfer_hypotheses(route, donor, receiver, moved)
        if not hypotheses.holds:
            problems.append("transfer hypotheses fail on the route")
        increases, before, after = _strictly_increases(graph, moved_graph, tol)
        if not increases:
            problems.append("SLEE did not increase")
        if "->A" in name and is_tricyclic(moved_graph):
            j = int(name[1])
            if not are_isomorphic(base(moved_graph).graph, build_A(j, 1)):
                problems.append(f"base of the result is not A_1^{j}")

        if problems:
            logger.error(f"Base move {name} failed: {problems}")
            counterexamples.append({
                "move": name, "graph6": to_graph6(graph), "donor": donor, "receiver": receiver,
                "moved": moved, "problems": problems, "slee_before": before, "slee_after": after,
            })
        else:
            witnesses.append(make_witness(moved_graph, after))

    passed = not counterexamples
    logger.info(f"base-moves n={n}: {len(instances)} moves, {'pass' if passed else 'FAIL'}")
    return VerificationReport(
        claim="base-moves",
        params={"n": n},
        passed=passed,
        witnesses=witnesses,
        counterexamples=counterexamples,
        details={"moves": len(instances), "names": sorted({name for name, *_ in instances})},
        elapsed_ms=(time.perf_counter() - start) * 1000.0,
    )
