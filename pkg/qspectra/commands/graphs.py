"""
Graph Commands

Per-graph queries: SLEE, Estrada index, characteristic polynomial, spectral
moments, walk counts, dominance, simple cycles, base, and the named families.
Every query command reads graph6 (or an edge list) from SOURCE and prints one
result per input graph.
"""

import logging

import click

from qspectra.commands.common import config_options, emit, fmt, input_argument, load_graphs
from qspectra.errors import InputError
from qspectra.families import FAMILY_IDS, build_family
from qspectra.graphs.graph import base, count_simple_cycles, is_tricyclic, simple_cycles, tricyclic_class
from qspectra.linalg.exact import adjacency, char_poly, moment_sequence, signless_laplacian
from qspectra.linalg.spectral import DEFAULT_REL_ERR, estrada_index, slee, slee_series
from qspectra.schemas.cli import FamilySpec
from qspectra.schemas.common import to_json_int
from qspectra.utils.formats import to_edge_list, to_graph6
from qspectra.walks import check_dominance, default_horizon, enumerate_walk_counts, walk_table

logger = logging.getLogger(__name__)


@click.command("slee")
@config_options
@click.option("--method", type=click.Choice(["eigen", "series"]), default="eigen", show_default=True)
@click.option("--rel-err", type=click.FloatRange(min=0, min_open=True), default=DEFAULT_REL_ERR,
              show_default=True, help="Series truncation target.")
@input_argument
@click.pass_obj
def slee_command(config, method, rel_err, source):
    """Signless Laplacian Estrada index of each input graph."""
    for graph in load_graphs(config, source):
        value = slee(graph, config.tol) if method == "eigen" else slee_series(graph, rel_err)
        payload = {"graph6": to_graph6(graph), **value.model_dump(mode="json")}
        emit(config, payload, fmt(value.value))


@click.command("estrada")
@config_options
@input_argument
@click.pass_obj
def estrada_command(config, source):
    """Adjacency Estrada index EE(G) of each input graph."""
    for graph in load_graphs(config, source):
        value = estrada_index(graph, config.tol)
        emit(config, {"graph6": to_graph6(graph), "estrada": value}, fmt(value))


@click.command("charpoly")
@config_options
@click.option("--matrix", type=click.Choice(["signless", "adjacency"]), default="signless", show_default=True)
@click.option("--pretty", is_flag=True, help="Print the polynomial instead of its coefficients.")
@input_argument
@click.pass_obj
def charpoly_command(config, matrix, pretty, source):
    """Exact det(M - xI) as coefficients c_0..c_n."""
    for graph in load_graphs(config, source):
        if graph.n == 0:
            raise InputError("characteristic polynomial needs at least one vertex")
        m = signless_laplacian(graph) if matrix == "signless" else adjacency(graph)
        poly = char_poly(m)
        coefficients = poly.model_dump(mode="json")["coefficients"]
        text = str(poly) if pretty else "[" + ", ".join(str(c) for c in poly.coefficients) + "]"
        emit(config, {"graph6": to_graph6(graph), "matrix": matrix, "char_poly": coefficients}, text)


@click.command("moments")
@config_options
@click.option("--max-k", type=click.IntRange(min=0), required=True, help="Largest k.")
@input_argument
@click.pass_obj
def moments_command(config, max_k, source):
    """Spectral moments T_0..T_K = Tr(Q^k), exact."""
    for graph in load_graphs(config, source):
        moments = moment_sequence(graph, max_k)
        payload = {"graph6": to_graph6(graph), **moments.model_dump(mode="json")}
        emit(config, payload, [f"{k}\t{t}" for k, t in enumerate(moments.moments)])


@click.command("walks")
@config_options
@click.option("--k", "length", type=click.IntRange(min=0), required=True, help="Walk length.")
@click.option("--from", "start", type=int, default=None)
@click.option("--to", "end", type=int, default=None)
@click.option("--oracle", is_flag=True, help="Count by explicit enumeration (n, k <= 10).")
@input_argument
@click.pass_obj
def walks_command(config, length, start, end, oracle, source):
    """Semi-edge walk counts of length k: one entry, or the full table."""
    if (start is None) != (end is None):
        raise click.UsageError("--from and --to must be given together")

    for graph in load_graphs(config, source):
        code = to_graph6(graph)
        if start is not None:
            if oracle:
                count = enumerate_walk_counts(graph, length, start)[_vertex(graph, end)]
            else:
                count = walk_table(graph, length)[_vertex(graph, start), _vertex(graph, end)]
            emit(config, {"graph6": code, "k": length, "from": start, "to": end,
                          "count": to_json_int(count)}, str(count))
            continue

        if oracle:
            rows = [enumerate_walk_counts(graph, length, x) for x in range(graph.n)]
        else:
            rows = [list(row) for row in walk_table(graph, length).counts.rows]
        payload = {"graph6": code, "k": length, "counts": [[to_json_int(c) for c in row] for row in rows]}
        emit(config, payload, [" ".join(str(c) for c in row) for row in rows])


def _vertex(graph, v):
    if not 0 <= v < graph.n:
        raise InputError(f"vertex {v} out of range for n={graph.n}")
    return v


@click.command("dominance")
@config_options
@click.option("--x", "x", type=int, required=True, help="Left walk start in G.")
@click.option("--y", "y", type=int, required=True, help="Left walk end in G.")
@click.option("--u", "u", type=int, required=True, help="Right walk start in H.")
@click.option("--v", "v", type=int, required=True, help="Right walk end in H.")
@click.option("--horizon", type=click.IntRange(min=1), default=None,
              help="Largest walk length compared [default: 2n + 8].")
@input_argument
@click.pass_obj
def dominance_command(config, x, y, u, v, horizon, source):
    """
    Compare |SW_k(G; x, y)| with |SW_k(H; u, v)| for k <= horizon.

    G is the first input graph and H the second; with a single input graph
    both sides use it.
    """
    graphs = load_graphs(config, source)
    g = graphs[0]
    h = graphs[1] if len(graphs) > 1 else g
    for graph, a, b in ((g, x, y), (h, u, v)):
        _vertex(graph, a)
        _vertex(graph, b)
    if horizon is None:
        horizon = max(default_horizon(g), default_horizon(h))

    verdict = check_dominance(g, x, y, h, u, v, horizon)
    text = [f"{verdict.outcome} (horizon {verdict.horizon})"]
    if verdict.first_strict_k is not None:
        text.append(f"first strict k: {verdict.first_strict_k}")
    if verdict.first_violation_k is not None:
        text.append(f"first violation k: {verdict.first_violation_k}")
    emit(config, verdict.model_dump(mode="json"), text)


@click.command("cycles")
@config_options
@click.option("--list", "show", is_flag=True, help="Also print every cycle.")
@input_argument
@click.pass_obj
def cycles_command(config, show, source):
    """Number of simple cycles of each input graph."""
    for graph in load_graphs(config, source):
        cycles = simple_cycles(graph)
        text = [str(len(cycles))]
        if show:
            text.extend(" ".join(str(v) for v in cycle) for cycle in cycles)
        emit(config, {"graph6": to_graph6(graph), "count": len(cycles),
                      "cycles": [list(c) for c in cycles]}, text)


@click.command("base")
@config_options
@input_argument
@click.pass_obj
def base_command(config, source):
    """Base B(G): the graph left after repeatedly deleting pendent vertices."""
    for graph in load_graphs(config, source):
        core = base(graph)
        graph_class = tricyclic_class(graph) if is_tricyclic(graph) else None
        payload = {
            "graph6": to_graph6(graph),
            "base": to_graph6(core.graph),
            "index_map": list(core.index_map),
            "simple_cycles": count_simple_cycles(core.graph),
            "class": graph_class,
        }
        emit(config, payload, [to_graph6(core.graph), " ".join(str(v) for v in core.index_map)])


@click.command("family")
@config_options
@click.option("--id", "family_id", type=click.Choice(FAMILY_IDS), required=True)
@click.option("--n", type=click.IntRange(min=1), default=None, help="Order, for the H families.")
@click.option("--output-format", type=click.Choice(["graph6", "edgelist"]), default="graph6",
              show_default=True)
@click.pass_obj
def family_command(config, family_id, n, output_format):
    """Emit a named graph: H3, H4, H6, H7 (with --n) or a base A<j>_<i>."""
    graph = build_family(FamilySpec(family_id=family_id, n=n))
    text = to_graph6(graph) if output_format == "graph6" else to_edge_list(graph).rstrip("\n")
    payload = {"family": family_id, "n": graph.n, "m": graph.m, "graph6": to_graph6(graph),
               "edges": [list(e) for e in graph.sorted_edges()]}
    emit(config, payload, text)
