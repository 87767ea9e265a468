"""
Tricyclic Graph Enumeration

Generates J_n, the connected graphs with n vertices and n + 2 edges, one per
isomorphism class.

Generation is by vertex augmentation: every connected graph has a vertex
whose removal leaves it connected, and removing a vertex never raises the
cyclomatic number. So level k + 1 is reached by joining a new vertex to every
non-empty subset of a level-k graph, keeping connected graphs with cyclomatic
number at most 3 and deduplicating by canonical form. The last level keeps
m = n + 2 only.
"""

import logging
import time
from itertools import combinations
from multiprocessing import Pool

from qspectra.errors import EnumerationRangeError
from qspectra.graphs.canonical import brute_force_canonical_bits, canonical_form
from qspectra.graphs.graph import Graph, is_connected, is_tricyclic, tricyclic_class
from qspectra.schemas.reports import EnumerationRun
from qspectra.utils.formats import parse_graph6

logger = logging.getLogger(__name__)

MIN_ENUMERATION_ORDER = 4
MAX_ENUMERATION_ORDER = 9
EXPENSIVE_ORDER = 9
MAX_NAIVE_ORDER = 6
MAX_CYCLOMATIC = 3


def _check_order(n, allow_expensive):
    if not MIN_ENUMERATION_ORDER <= n <= MAX_ENUMERATION_ORDER:
        raise EnumerationRangeError(
            f"tricyclic enumeration supports {MIN_ENUMERATION_ORDER} <= n <= "
            f"{MAX_ENUMERATION_ORDER}, got n={n}"
        )
    if n >= EXPENSIVE_ORDER:
        if not allow_expensive:
            raise EnumerationRangeError(
                f"enumeration at n={n} is expensive; pass allow_expensive to run it"
            )
        logger.warning(f"Running expensive enumeration at n={n}")


def _augment(graph, final_order):
    """
    Canonical graph6 strings of all one-vertex extensions of `graph`.

    On the final level only extensions with exactly final_order + 2 edges are
    kept; earlier levels keep everything with cyclomatic number <= 3.
    """
    k = graph.n
    new = k
    if k + 1 == final_order:
        degrees = [final_order + 2 - graph.m]
    else:
        degrees = range(1, k + MAX_CYCLOMATIC - graph.m + 1)

    found = set()
    for d in degrees:
        if not 1 <= d <= k:
            continue
        for subset in combinations(range(k), d):
            edges = set(graph.edges)
            edges.update((v, new) for v in subset)
            found.add(canonical_form(Graph(k + 1, frozenset(edges))).graph6())
    return found


def _augment_chunk(args):
    codes, final_order = args
    found = set()
    for code in codes:
        found |= _augment(parse_graph6(code), final_order)
    return found


def _chunks(items, count):
    size = max(1, -(-len(items) // count))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _next_level(codes, final_order, jobs):
    codes = sorted(codes)
    if jobs <= 1 or len(codes) < 2 * jobs:
        return _augment_chunk((codes, final_order))

    tasks = [(chunk, final_order) for chunk in _chunks(codes, jobs * 4)]
    found = set()
    with Pool(processes=jobs) as pool:
        for part in pool.imap_unordered(_augment_chunk, tasks):
            found |= part
    return found


def enumerate_tricyclic(n, jobs=1, allow_expensive=False):
    """
    Enumerate J_n up to isomorphism.

    Args:
        n: vertex count, 4..9 (n = 9 needs allow_expensive)
        jobs: worker processes; results are merged by set union, so the
            output does not depend on it
        allow_expensive: permit n = 9

    Returns:
        List of canonically labeled graphs sorted by canonical graph6

    Raises:
        EnumerationRangeError: if n is out of range
    """
    _check_order(n, allow_expensive)
    logger.info(f"Enumerating tricyclic graphs on {n} vertices with {jobs} worker(s)")

    level = {canonical_form(Graph(1, frozenset())).graph6()}
    for k in range(1, n):
        level = _next_level(level, n, jobs)
        logger.debug(f"Level {k + 1}: {len(level)} graphs")

    graphs = [parse_graph6(code) for code in sorted(level)]
    logger.info(f"Found {len(graphs)} tricyclic graphs on {n} vertices")
    return graphs


def enumerate_tricyclic_naive(n):
    """
    Reference enumeration: filter every (n + 2)-edge subset of K_n and dedup
    by the brute-force permutation canonical form. Oracle for n <= 6.

    Returns:
        List of graphs, one per isomorphism class, sorted by canonical bits
    """
    if not MIN_ENUMERATION_ORDER <= n <= MAX_NAIVE_ORDER:
        raise EnumerationRangeError(
            f"naive enumeration supports {MIN_ENUMERATION_ORDER} <= n <= {MAX_NAIVE_ORDER}, got n={n}"
        )
    pairs = list(combinations(range(n), 2))
    classes = {}
    for subset in combinations(pairs, n + 2):
        graph = Graph(n, frozenset(subset))
        if not is_connected(graph):
            continue
        key = brute_force_canonical_bits(graph)
        if key not in classes:
            classes[key] = graph
    return [classes[key] for key in sorted(classes)]


def run_enumeration(n, jobs=1, allow_expensive=False):
    """
    Enumerate J_n and split it into the classes J_n^j.

    Returns:
        EnumerationRun with per-class counts and the sorted canonical registry
    """
    start = time.perf_counter()
    graphs = enumerate_tricyclic(n, jobs=jobs, allow_expensive=allow_expensive)
    counts = {j: 0 for j in (3, 4, 6, 7)}
    registry = []
    for graph in graphs:
        if not is_tricyclic(graph):
            raise AssertionError(f"enumeration emitted a non-tricyclic graph {graph!r}")
        counts[tricyclic_class(graph)] += 1
        registry.append(canonical_form(graph).graph6())
    elapsed = (time.perf_counter() - start) * 1000.0
    logger.info(f"J_{n} class sizes: {counts} ({elapsed:.0f} ms)")
    return EnumerationRun(n=n, counts=counts, registry=sorted(registry), elapsed_ms=elapsed)


def enumerate_class(n, j, jobs=1, allow_expensive=False):
    """Members of J_n^j."""
    return [
        g for g in enumerate_tricyclic(n, jobs=jobs, allow_expensive=allow_expensive)
        if tricyclic_class(g) == j
    ]
