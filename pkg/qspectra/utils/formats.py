"""
Graph Interchange Formats

This module reads and writes graph6 (short form, n <= 62) and the plain
edge-list format ("n m" header followed by one "u v" pair per line).
"""

import logging

import networkx as nx

from qspectra.errors import EdgeListParseError, Graph6ParseError
from qspectra.graphs.graph import Graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_ORDER = 62


def _graph6_length(n):
    bits = n * (n - 1) // 2
    return 1 + (bits + 5) // 6


def parse_graph6(text):
    """
    Decode one graph6 string.

    The bytes are validated here so that errors carry an offset; the decoding
    itself is networkx's.

    Args:
        text: graph6 text, optionally prefixed by the ">>graph6<<" header

    Returns:
        Graph with exactly the encoded adjacency

    Raises:
        Graph6ParseError: on a bad header byte, wrong length, a byte outside
            63..126, or non-zero padding bits
    """
    offset = 0
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)

    if not data:
        raise Graph6ParseError("empty graph6 string", offset)

    first = ord(data[0]) - 63
    if first == 63:
        raise Graph6ParseError("long-form graph6 (n > 62) is not supported", offset)
    if not 0 <= first <= GRAPH6_MAX_ORDER:
        raise Graph6ParseError(f"invalid vertex-count byte {data[0]!r}", offset)
    n = first

    expected = _graph6_length(n)
    if len(data) != expected:
        raise Graph6ParseError(
            f"expected {expected} bytes for n={n}, got {len(data)}", offset + min(len(data), expected)
        )

    for position, char in enumerate(data[1:], start=1):
        if not 0 <= ord(char) - 63 < 64:
            raise Graph6ParseError(f"byte {char!r} outside the graph6 range", offset + position)

    padding = 6 * (expected - 1) - n * (n - 1) // 2
    if padding and (ord(data[-1]) - 63) & ((1 << padding) - 1):
        raise Graph6ParseError("non-zero padding bits", offset + len(data) - 1)

    return Graph.from_networkx(nx.from_graph6_bytes(data.encode("ascii")))


def to_graph6(graph):
    """Encode a graph as short-form graph6 (no header)."""
    if graph.n > GRAPH6_MAX_ORDER:
        raise ValueError(f"short-form graph6 supports n <= {GRAPH6_MAX_ORDER}, got n={graph.n}")
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").rstrip("\n")


def parse_graph6_lines(text):
    """
    Decode a stream with one graph6 string per line.

    Blank lines and a leading ">>graph6<<" header are skipped.

    Returns:
        List of Graph
    """
    graphs = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            graphs.append(parse_graph6(line))
        except Graph6ParseError as e:
            logger.error(f"graph6 decode failed on line {number}: {str(e)}")
            raise
    return graphs


def read_edge_list(text):
    """
    Parse the edge-list format: first line "n m", then m lines "u v".

    Returns:
        Graph

    Raises:
        EdgeListParseError: on a malformed header or edge line, a vertex out of
            range, a loop, a repeated edge, or an edge count mismatch
    """
    lines = [(i, line.split()) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        raise EdgeListParseError("missing 'n m' header", 1)

    header_line, header = lines[0]
    try:
        n, m = (int(token) for token in header)
    except ValueError:
        raise EdgeListParseError(f"header must be 'n m', got {' '.join(header)!r}", header_line)
    if n < 0 or m < 0:
        raise EdgeListParseError("n and m must be non-negative", header_line)

    edges = set()
    for number, tokens in lines[1:]:
        try:
            u, v = (int(token) for token in tokens)
        except ValueError:
            raise EdgeListParseError(f"edge line must be 'u v', got {' '.join(tokens)!r}", number)
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u}", number)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"vertex out of range 0..{n - 1}", number)
        edge = (min(u, v), max(u, v))
        if edge in edges:
            raise EdgeListParseError(f"repeated edge {edge}", number)
        edges.add(edge)

    if len(edges) != m:
        raise EdgeListParseError(f"header announces {m} edges, found {len(edges)}", header_line)
    return Graph(n, frozenset(edges))


def to_edge_list(graph):
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.sorted_edges())
    return "\n".join(lines) + "\n"


def read_graphs(text, input_format="graph6"):
    """Read every graph in `text` using the named format."""
    if input_format == "edgelist":
        return [read_edge_list(text)]
    return parse_graph6_lines(text)
