"""
Search Commands

Exhaustive enumeration of tricyclic graphs and the `verify` group. Verifiers
print their reports; a failed report or a witness that does not revalidate
exits with status 1.
"""

import logging

import click

from qspectra.commands.common import config_options, finish_reports, jobs_option
from qspectra.graphs.canonical import canonical_form
from qspectra.graphs.graph import tricyclic_class
from qspectra.models.cache import SpectralCache
from qspectra.schemas.reports import EnumerationRun
from qspectra.search.enumeration import enumerate_tricyclic_naive, run_enumeration
from qspectra.search.transfers import verify_base_moves, verify_transfer_lemma
from qspectra.search.verification import (
    verify_cospectral_family,
    verify_recurrence,
    verify_theorem1,
    verify_theorem2,
)
from qspectra.utils.formats import parse_graph6

logger = logging.getLogger(__name__)

CLASS_CHOICE = click.Choice(["3", "4", "6", "7"])


def _open_cache(config):
    if not config.cache_path:
        return None
    return SpectralCache(config.cache_path)


@click.command("enumerate")
@config_options
@jobs_option
@click.option("--n", type=int, required=True, help="Vertex count, 4..9.")
@click.option("--class", "graph_class", type=CLASS_CHOICE, default=None, help="Keep only J_n^j.")
@click.option("--naive", is_flag=True, help="Use the edge-subset oracle (n <= 6).")
@click.option("--allow-expensive", is_flag=True, help="Permit n = 9.")
@click.option("--summary", is_flag=True, help="Print class sizes instead of the graphs.")
@click.pass_obj
def enumerate_command(config, n, graph_class, naive, allow_expensive, summary):
    """Enumerate tricyclic graphs on n vertices, one per isomorphism class."""
    if naive:
        graphs = enumerate_tricyclic_naive(n)
        counts = {j: 0 for j in (3, 4, 6, 7)}
        for graph in graphs:
            counts[tricyclic_class(graph)] += 1
        run = EnumerationRun(
            n=n, counts=counts, registry=sorted(canonical_form(g).graph6() for g in graphs)
        )
    else:
        run = run_enumeration(n, jobs=config.jobs, allow_expensive=allow_expensive)

    registry = run.registry
    if graph_class is not None:
        j = int(graph_class)
        registry = [code for code in registry if tricyclic_class(parse_graph6(code)) == j]

    if config.output_format == "json":
        click.echo(run.model_copy(update={"registry": registry}).model_dump_json(indent=2))
    elif summary:
        for j, count in run.counts.items():
            click.echo(f"J_{n}^{j}\t{count}")
        click.echo(f"J_{n}\t{run.total}")
    else:
        for code in registry:
            click.echo(code)


@click.group("verify")
def verify_group():
    """Check a claim and report pass (exit 0) or fail (exit 1)."""


@verify_group.command("theorem1")
@config_options
@jobs_option
@click.option("--n", type=int, required=True)
@click.option("--class", "graph_class", type=CLASS_CHOICE, required=True)
@click.option("--allow-expensive", is_flag=True, help="Permit n = 9.")
@click.pass_context
def theorem1_command(ctx, n, graph_class, allow_expensive):
    """H_j^n is the unique SLEE maximizer over J_n^j."""
    config = ctx.obj
    report = verify_theorem1(n, int(graph_class), jobs=config.jobs, tol=config.tol,
                             cache=_open_cache(config), allow_expensive=allow_expensive)
    finish_reports(ctx, [report])


@verify_group.command("theorem2")
@config_options
@jobs_option
@click.option("--n", type=int, required=True)
@click.option("--allow-expensive", is_flag=True, help="Permit n = 9.")
@click.pass_context
def theorem2_command(ctx, n, allow_expensive):
    """The SLEE maximizers over J_n are exactly H_6^n and H_7^n."""
    config = ctx.obj
    report = verify_theorem2(n, jobs=config.jobs, tol=config.tol,
                             cache=_open_cache(config), allow_expensive=allow_expensive)
    finish_reports(ctx, [report])


@verify_group.command("cospectral")
@config_options
@click.option("--n-max", type=click.IntRange(min=5), required=True)
@click.pass_context
def cospectral_command(ctx, n_max):
    """Q(H_6^n) and Q(H_7^n) share their characteristic polynomial for 5 <= n <= n_max."""
    finish_reports(ctx, [verify_cospectral_family(n_max, tol=ctx.obj.tol)])


@verify_group.command("recurrence")
@config_options
@click.option("--j", type=click.Choice(["6", "7"]), required=True)
@click.option("--n-max", type=click.IntRange(min=6), required=True)
@click.option("--form", type=click.Choice(["printed", "corrected", "both"]), default="both",
              show_default=True)
@click.pass_context
def recurrence_command(ctx, j, n_max, form):
    """
    Bordered-matrix recurrence for det(Q(H_j^n) - xI), checked exactly.

    With --form both, the exit status is 0 when at least one form holds for
    every n.
    """
    forms = ["printed", "corrected"] if form == "both" else [form]
    reports = [verify_recurrence(int(j), n_max, f, tol=ctx.obj.tol) for f in forms]
    finish_reports(ctx, reports, require="any" if form == "both" else "all")


@verify_group.command("transfer")
@config_options
@click.option("--instances", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_context
def transfer_command(ctx, instances, seed):
    """Random transfers whose hypotheses hold must strictly increase SLEE."""
    finish_reports(ctx, [verify_transfer_lemma(instances, seed, tol=ctx.obj.tol)])


@verify_group.command("base-moves")
@config_options
@click.option("--n", type=click.IntRange(min=4), required=True)
@click.pass_context
def base_moves_command(ctx, n):
    """The structural moves toward the extremal bases strictly increase SLEE."""
    finish_reports(ctx, [verify_base_moves(n, tol=ctx.obj.tol)])
