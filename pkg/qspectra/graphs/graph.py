"""
Graph representation and the structural graph theory used by the package.

Graphs are simple, undirected, and labeled 0..n-1. They are immutable: every
operation that "changes" a graph returns a new one.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional

import networkx as nx

from qspectra.errors import InvalidGraphError

logger = logging.getLogger(__name__)

TRICYCLIC_CLASSES = (3, 4, 6, 7)


def _normalize_edge(u, v, n):
    if not (isinstance(u, int) and isinstance(v, int)):
        raise InvalidGraphError(f"edge ({u!r}, {v!r}) has non-integer endpoints")
    if u == v:
        raise InvalidGraphError(f"self-loop at vertex {u}")
    if not (0 <= u < n and 0 <= v < n):
        raise InvalidGraphError(f"edge ({u}, {v}) out of range for n={n}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..n-1.

    Attributes:
        n: vertex count
        edges: unordered pairs stored as (min, max) tuples
        adjacency: neighbor sets N(v), derived from edges
    """
    n: int
    edges: frozenset
    adjacency: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise InvalidGraphError(f"vertex count must be a non-negative integer, got {self.n!r}")
        normalized = frozenset(_normalize_edge(u, v, self.n) for u, v in self.edges)
        object.__setattr__(self, "edges", normalized)
        neighbors = [set() for _ in range(self.n)]
        for u, v in normalized:
            neighbors[u].add(v)
            neighbors[v].add(u)
        object.__setattr__(self, "adjacency", tuple(frozenset(s) for s in neighbors))

    @classmethod
    def from_edges(cls, n, edges: Iterable):
        """Build a graph, rejecting parallel edges given twice in either order."""
        edge_list = [_normalize_edge(u, v, n) for u, v in edges]
        if len(set(edge_list)) != len(edge_list):
            raise InvalidGraphError("parallel edges are not allowed")
        return cls(n, frozenset(edge_list))

    @classmethod
    def from_networkx(cls, nx_graph):
        """Convert a networkx graph whose nodes are 0..n-1."""
        n = nx_graph.number_of_nodes()
        if set(nx_graph.nodes()) != set(range(n)):
            nx_graph = nx.convert_node_labels_to_integers(nx_graph, ordering="sorted")
        return cls(n, frozenset((int(u), int(v)) for u, v in nx_graph.edges()))

    def to_networkx(self):
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges)
        return nx_graph

    @property
    def m(self):
        return len(self.edges)

    def sorted_edges(self):
        return sorted(self.edges)

    def neighbors(self, v):
        return self.adjacency[v]

    def degree(self, v):
        return len(self.adjacency[v])

    def has_edge(self, u, v):
        return v in self.adjacency[u]

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def degrees(graph):
    return [len(nbrs) for nbrs in graph.adjacency]


def max_degree(graph):
    return max(degrees(graph), default=0)


def connected_components(graph):
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    components = [sorted(c) for c in nx.connected_components(graph.to_networkx())]
    return sorted(components)


def is_connected(graph):
    return graph.n > 0 and len(connected_components(graph)) == 1


def cyclomatic_number(graph):
    """r(G) = m - n + c, additive over connected components."""
    return graph.m - graph.n + len(connected_components(graph))


def is_tricyclic(graph):
    """True iff G is connected and m = n + 2."""
    return graph.m == graph.n + 2 and is_connected(graph)


def triangles(graph):
    """Number of triangles."""
    count = 0
    for u, v in graph.edges:
        count += len(graph.adjacency[u] & graph.adjacency[v])
    return count // 3


def simple_cycles(graph):
    """
    Enumerate simple cycles by backtracking.

    Each cycle is reported once, as a vertex tuple starting at its smallest
    vertex and oriented so that the second vertex is smaller than the last.

    Returns:
        List of cycles (tuples of length >= 3), in discovery order
    """
    adjacency = graph.adjacency
    cycles = []

    for start in range(graph.n):
        path = [start]
        on_path = {start}

        def extend(v):
            for w in sorted(adjacency[v]):
                if w == start:
                    if len(path) >= 3 and path[1] < path[-1]:
                        cycles.append(tuple(path))
                elif w > start and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(start)

    return cycles


def count_simple_cycles(graph):
    return len(simple_cycles(graph))


def pendent_vertices(graph):
    """All vertices of degree exactly 1."""
    return frozenset(v for v in range(graph.n) if graph.degree(v) == 1)


def induced_subgraph(graph, vertices):
    """
    Subgraph induced by `vertices`, relabeled 0..k-1 in increasing vertex order.

    Returns:
        (subgraph, index_map) where index_map[i] is the original vertex of i
    """
    index_map = tuple(sorted(set(vertices)))
    position = {v: i for i, v in enumerate(index_map)}
    edges = frozenset(
        (position[u], position[v]) for u, v in graph.edges if u in position and v in position
    )
    return Graph(len(index_map), edges), index_map


@dataclass(frozen=True)
class BaseSubgraph:
    """The base B(G) of a graph together with its index map back into G."""
    graph: Graph
    index_map: tuple

    def original(self, v):
        return self.index_map[v]

    def local(self, original_vertex):
        return self.index_map.index(original_vertex)


def base(graph):
    """
    The base B(G): iteratively delete vertices of degree <= 1 until none remain.

    Returns:
        BaseSubgraph with the induced subgraph and its index map

    Raises:
        InvalidGraphError: if nothing survives (G is a forest)
    """
    alive = set(range(graph.n))
    degree = {v: graph.degree(v) for v in alive}
    queue = [v for v in alive if degree[v] <= 1]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in graph.adjacency[v]:
            if w in alive:
                degree[w] -= 1
                if degree[w] == 1:
                    queue.append(w)

    if not alive:
        logger.error(f"Base requested for a forest on {graph.n} vertices")
        raise InvalidGraphError("base is empty: the graph has no cycle")

    subgraph, index_map = induced_subgraph(graph, alive)
    return BaseSubgraph(subgraph, index_map)


def tricyclic_class(graph):
    """
    Number of simple cycles of the base of a tricyclic graph.

    Raises:
        InvalidGraphError: if G is not tricyclic
    """
    if not is_tricyclic(graph):
        raise InvalidGraphError(
            f"graph with n={graph.n}, m={graph.m} is not a connected tricyclic graph"
        )
    j = count_simple_cycles(base(graph).graph)
    if j not in TRICYCLIC_CLASSES:
        raise AssertionError(f"tricyclic base with {j} simple cycles")
    return j


def relabel(graph, perm):
    """Rename vertex v to perm[v]."""
    if sorted(perm) != list(range(graph.n)):
        raise InvalidGraphError(f"{perm!r} is not a permutation of 0..{graph.n - 1}")
    return Graph(graph.n, frozenset((perm[u], perm[v]) for u, v in graph.edges))


def add_edges(graph, pairs):
    """Return G plus the given edges; each must be absent from G."""
    new_edges = set(graph.edges)
    for u, v in pairs:
        edge = _normalize_edge(u, v, graph.n)
        if edge in new_edges:
            raise InvalidGraphError(f"edge {edge} already present")
        new_edges.add(edge)
    return Graph(graph.n, frozenset(new_edges))


def remove_edges(graph, pairs):
    """Return G minus the given edges; each must be present in G."""
    new_edges = set(graph.edges)
    for u, v in pairs:
        edge = _normalize_edge(u, v, graph.n)
        if edge not in new_edges:
            raise InvalidGraphError(f"edge {edge} not present")
        new_edges.discard(edge)
    return Graph(graph.n, frozenset(new_edges))


def empty_graph(n):
    return Graph(n, frozenset())


def complete_graph(n):
    return Graph(n, frozenset((u, v) for v in range(n) for u in range(v)))


def path_graph(n):
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n):
    if n < 3:
        raise InvalidGraphError(f"a simple cycle needs at least 3 vertices, got {n}")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves):
    """Star with center 0 and `leaves` leaves."""
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def random_graph(n, p, seed: Optional[int] = None):
    """Erdos-Renyi G(n, p)."""
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))
