"""
Command Helpers

Input ingestion and output rendering shared by every command.
"""

import json
import logging

import click

from qspectra.errors import EXIT_VERIFICATION_FAILED, InputError
from qspectra.search.verification import revalidate_report
from qspectra.utils.formats import read_graphs

logger = logging.getLogger(__name__)

TEXT_DIGITS = 12


def input_argument(func):
    """Positional SOURCE: a file path, or "-" (the default) for stdin."""
    return click.argument("source", type=click.File("r", encoding="utf-8"), default="-")(func)


def _override(name):
    def callback(ctx, param, value):
        if value is not None and ctx.obj is not None:
            ctx.obj = ctx.obj.model_copy(update={name: value})
        return value
    return callback


def config_options(func):
    """
    Let --format and --tol also follow the subcommand name.

    A value given here overrides the group-level one for this command only.
    """
    func = click.option("--tol", type=click.FloatRange(min=0, min_open=True), default=None,
                        expose_value=False, callback=_override("tol"),
                        help="Eigensolver tolerance for this command.")(func)
    func = click.option("--format", type=click.Choice(["text", "json"]), default=None,
                        expose_value=False, callback=_override("output_format"),
                        help="Output format for this command.")(func)
    return func


def jobs_option(func):
    """Let --jobs also follow the subcommand name."""
    return click.option("--jobs", type=click.IntRange(min=1), default=None,
                        expose_value=False, callback=_override("jobs"),
                        help="Worker processes for this command.")(func)


def load_graphs(config, source):
    """
    Read every graph from `source` in the configured input format.

    Raises:
        InputError: if the input cannot be read as UTF-8 text or holds no graph
    """
    name = getattr(source, "name", "input")
    try:
        text = source.read()
    except (UnicodeDecodeError, OSError) as e:
        logger.error(f"Could not read {name}: {str(e)}")
        raise InputError(f"unreadable input {name}: {e}") from e

    graphs = read_graphs(text, config.input_format)
    if not graphs:
        raise InputError(f"no graph found in {name}")
    logger.debug(f"Read {len(graphs)} graph(s) from {name}")
    return graphs


def fmt(value):
    """Fixed text rendering of a float: 12 significant digits."""
    return f"{value:.{TEXT_DIGITS}g}"


def emit(config, payload, text):
    """Print one result: `payload` as JSON, or the `text` lines."""
    if config.output_format == "json":
        click.echo(json.dumps(payload))
    elif isinstance(text, str):
        click.echo(text)
    else:
        for line in text:
            click.echo(line)


def report_lines(report):
    lines = [f"{report.claim}: {'PASS' if report.passed else 'FAIL'}"]
    params = ", ".join(f"{key}={value}" for key, value in report.params.items())
    if params:
        lines.append(f"  params: {params}")
    for witness in report.witnesses:
        lines.append(f"  witness {witness.graph6}  slee={fmt(witness.slee)}  class={witness.graph_class}")
    for counterexample in report.counterexamples:
        lines.append(f"  counterexample {json.dumps(counterexample)}")
    lines.append(f"  elapsed: {report.elapsed_ms:.1f} ms")
    return lines


def finish_reports(ctx, reports, require="all"):
    """
    Print reports, revalidate their witnesses and set the exit code.

    Exit 1 when a report fails (any of them with require="all", every one of
    them with require="any") or a witness does not revalidate.
    """
    config = ctx.obj
    if config.output_format == "json":
        payload = [json.loads(r.to_json()) for r in reports]
        click.echo(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    else:
        for report in reports:
            for line in report_lines(report):
                click.echo(line)

    outcomes = [r.passed for r in reports]
    passed = all(outcomes) if require == "all" else any(outcomes)
    for report in reports:
        if revalidate_report(report, config.tol):
            passed = False
    if not passed:
        ctx.exit(EXIT_VERIFICATION_FAILED)
