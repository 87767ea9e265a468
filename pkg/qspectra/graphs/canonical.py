"""
Canonical forms for small graphs.

The canonical form is the lexicographically smallest adjacency bit string
(graph6 order: column by column over the upper triangle) over all vertex
orders. The minimum is found one position at a time: only partial orders with
the smallest prefix survive a level, partial orders that leave every unplaced
vertex with the same adjacency to the placed ones are merged, and twin
vertices are placed in index order.

An individualisation-refinement pass first relabels the graph into an order
that depends only on its isomorphism type, so the minimum search runs once per
isomorphism class and its result is cached.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from qspectra.errors import InvalidGraphError
from qspectra.graphs.graph import Graph, relabel
from qspectra.utils.formats import to_graph6

logger = logging.getLogger(__name__)

MAX_CANONICAL_ORDER = 16
MAX_BRUTE_FORCE_ORDER = 8
MINIMUM_CACHE_SIZE = 8192


@dataclass(frozen=True)
class CanonicalForm:
    """
    Attributes:
        n: vertex count
        bits: canonical adjacency bit string of length n(n-1)/2
        labeling: labeling[i] is the original vertex placed at position i
    """
    n: int
    bits: str
    labeling: tuple = field(compare=False)

    def graph(self):
        """The canonically labeled graph."""
        return Graph(self.n, frozenset(_edges_from_bits(self.n, self.bits)))

    def graph6(self):
        return to_graph6(self.graph())


def _edges_from_bits(n, bits):
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k] == "1":
                yield (i, j)
            k += 1


def adjacency_bits(graph, order):
    """Bit string of `graph` with vertex order[i] placed at position i."""
    adjacency = graph.adjacency
    return "".join(
        "1" if order[i] in adjacency[order[j]] else "0"
        for j in range(1, len(order))
        for i in range(j)
    )


def _refine(adjacency, cells):
    """Split cells by neighbour counts into every cell until stable."""
    while True:
        index = {v: i for i, cell in enumerate(cells) for v in cell}
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            signature = {
                v: tuple(sorted(Counter(index[w] for w in adjacency[v]).items())) for v in cell
            }
            for key in sorted(set(signature.values())):
                refined.append([v for v in cell if signature[v] == key])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _shares_orbit(candidate, explored, fixed, automorphisms, n):
    """True if `candidate` shares an orbit with an explored vertex under the
    automorphisms found so far that fix `fixed` pointwise."""
    if not explored:
        return False
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for sigma in automorphisms:
        if all(sigma[f] == f for f in fixed):
            for a in range(n):
                ra, rb = find(a), find(sigma[a])
                if ra != rb:
                    parent[ra] = rb
    root = find(candidate)
    return any(find(w) == root for w in explored)


def _refined_order(graph):
    """
    Smallest leaf of the individualisation-refinement tree.

    The bits depend only on the isomorphism type of `graph`; the order maps
    each position to the vertex placed there.
    """
    n = graph.n
    adjacency = graph.adjacency
    best = {"bits": None, "order": None}
    automorphisms = []

    def search(cells, fixed):
        prefix_len = 0
        while prefix_len < len(cells) and len(cells[prefix_len]) == 1:
            prefix_len += 1

        if best["bits"] is not None and prefix_len > 1:
            prefix = adjacency_bits(graph, [cells[i][0] for i in range(prefix_len)])
            if prefix > best["bits"][:len(prefix)]:
                return

        if prefix_len == len(cells):
            order = [cell[0] for cell in cells]
            bits = adjacency_bits(graph, order)
            if best["bits"] is None or bits < best["bits"]:
                best["bits"], best["order"] = bits, order
            elif bits == best["bits"]:
                sigma = [0] * n
                for reference, vertex in zip(best["order"], order):
                    sigma[reference] = vertex
                automorphisms.append(tuple(sigma))
            return

        target = prefix_len
        while len(cells[target]) == 1:
            target += 1
        cell = cells[target]
        explored = []
        for v in sorted(cell):
            if _shares_orbit(v, explored, fixed, automorphisms, n):
                continue
            explored.append(v)
            child = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1:]
            search(_refine(adjacency, child), fixed + [v])

    search(_refine(adjacency, [list(range(n))]), [])
    return best["bits"], best["order"]


def _twin_predecessors(adjacency, n):
    """
    predecessor[v] is the previous member of v's twin class, or None.

    Twins share their open (or closed) neighbourhood, so every permutation
    inside a twin class is an automorphism.
    """
    predecessor = [None] * n
    grouped = set()
    for closed in (False, True):
        classes = {}
        for v in range(n):
            if v not in grouped:
                key = adjacency[v] | {v} if closed else adjacency[v]
                classes.setdefault(key, []).append(v)
        for members in classes.values():
            if len(members) > 1:
                grouped.update(members)
                for previous, v in zip(members, members[1:]):
                    predecessor[v] = previous
    return predecessor


@lru_cache(maxsize=MINIMUM_CACHE_SIZE)
def _minimal_order(n, bits):
    """Vertex order of the graph with graph6-order `bits` that gives the
    lexicographically smallest bit string."""
    adjacency = [set() for _ in range(n)]
    for u, v in _edges_from_bits(n, bits):
        adjacency[u].add(v)
        adjacency[v].add(u)
    adjacency = [frozenset(s) for s in adjacency]
    predecessor = _twin_predecessors(adjacency, n)

    # vectors[v] is the adjacency of unplaced v to the placed vertices, read
    # in placement order as a binary number; -1 once v is placed
    states = {(0,) * n: ()}
    for _ in range(n):
        smallest = None
        survivors = {}
        for vectors, order in states.items():
            for v in range(n):
                block = vectors[v]
                if block < 0:
                    continue
                twin = predecessor[v]
                if twin is not None and vectors[twin] >= 0:
                    continue
                if smallest is not None and block > smallest:
                    continue
                if smallest is None or block < smallest:
                    smallest = block
                    survivors = {}
                neighbours = adjacency[v]
                key = tuple(
                    -1 if x < 0 or w == v else 2 * x + (w in neighbours)
                    for w, x in enumerate(vectors)
                )
                survivors.setdefault(key, order + (v,))
        states = survivors
    return next(iter(states.values()))


def canonical_form(graph):
    """
    Compute the canonical form of a graph with at most 16 vertices.

    Returns:
        CanonicalForm whose bits are the smallest over all n! vertex orders

    Raises:
        InvalidGraphError: if the graph is larger than the canonizer supports
    """
    n = graph.n
    if n > MAX_CANONICAL_ORDER:
        raise InvalidGraphError(
            f"canonical form supports n <= {MAX_CANONICAL_ORDER}, got n={n}"
        )
    if n == 0:
        return CanonicalForm(0, "", ())

    refined_bits, refined_order = _refined_order(graph)
    labeling = tuple(refined_order[p] for p in _minimal_order(n, refined_bits))
    return CanonicalForm(n, adjacency_bits(graph, labeling), labeling)


def canonical_graph(graph):
    """The graph relabeled into canonical order."""
    form = canonical_form(graph)
    perm = [0] * graph.n
    for position, vertex in enumerate(form.labeling):
        perm[vertex] = position
    return relabel(graph, perm)


def are_isomorphic(g, h):
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


def brute_force_canonical_bits(graph):
    """
    Minimal bit string over all n! vertex orders. Oracle for small graphs.

    Raises:
        InvalidGraphError: if n exceeds MAX_BRUTE_FORCE_ORDER
    """
    if graph.n > MAX_BRUTE_FORCE_ORDER:
        raise InvalidGraphError(
            f"brute-force canonical form supports n <= {MAX_BRUTE_FORCE_ORDER}, got n={graph.n}"
        )
    return min(adjacency_bits(graph, order) for order in permutations(range(graph.n)))


def are_isomorphic_brute_force(g, h):
    """Permutation-testing isomorphism oracle."""
    if g.n != h.n or g.m != h.m:
        return False
    target = h.edges
    for perm in permutations(range(g.n)):
        if frozenset(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges) == target:
            return True
    return False
