"""
Command-Line Entry

The `qspectra` click group: global options, configuration merge, and the
mapping from package errors to exit codes (0 success or pass, 1 verification
failed, 2 usage or input error).
"""

import logging

import click
from pydantic import ValidationError

from qspectra import __version__
from qspectra.commands.graphs import (
    base_command,
    charpoly_command,
    cycles_command,
    dominance_command,
    estrada_command,
    family_command,
    moments_command,
    slee_command,
    walks_command,
)
from qspectra.commands.search import enumerate_command, verify_group
from qspectra.config import LOG_LEVELS, get_settings
from qspectra.errors import EXIT_OK, QSpectraError
from qspectra.schemas.cli import CliConfig

logger = logging.getLogger(__name__)


class QSpectraGroup(click.Group):
    """Group that turns package errors into a diagnostic and their exit code."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except QSpectraError as e:
            logger.error(f"{type(e).__name__}: {str(e)}")
            click.echo(f"Error: {e}", err=True)
            ctx.exit(e.exit_code)


@click.group(cls=QSpectraGroup)
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text",
              show_default=True, help="Output format.")
@click.option("--input-format", type=click.Choice(["graph6", "edgelist"]), default="graph6",
              show_default=True, help="Format of graph input.")
@click.option("--tol", type=click.FloatRange(min=0, min_open=True), default=None,
              help="Eigensolver tolerance [default: QSPECTRA_TOL or 1e-12].")
@click.option("--jobs", type=click.IntRange(min=1), default=None,
              help="Worker processes for enumeration [default: QSPECTRA_JOBS or 1].")
@click.option("--cache", "cache_path", type=click.Path(dir_okay=False), default=None,
              help="JSON-lines spectral cache [default: QSPECTRA_CACHE].")
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None,
              help="Level of the qspectra logger [default: QSPECTRA_LOG_LEVEL or INFO].")
@click.version_option(__version__, prog_name="qspectra")
@click.pass_context
def cli(ctx, output_format, input_format, tol, jobs, cache_path, log_level):
    """Signless Laplacian spectra, SLEE and extremal tricyclic graphs."""
    settings = get_settings()
    try:
        config = CliConfig(
            output_format=output_format,
            input_format=input_format,
            tol=tol if tol is not None else settings.tol,
            jobs=jobs if jobs is not None else settings.jobs,
            cache_path=cache_path if cache_path is not None else settings.cache_path,
            log_level=(log_level or settings.log_level).upper(),
        )
    except ValidationError as e:
        raise click.UsageError(str(e))

    logging.getLogger("qspectra").setLevel(config.log_level)
    logger.debug(f"Configuration: {config.model_dump()}")
    ctx.obj = config


for command in (
    slee_command,
    estrada_command,
    charpoly_command,
    moments_command,
    walks_command,
    dominance_command,
    cycles_command,
    base_command,
    family_command,
    enumerate_command,
    verify_group,
):
    cli.add_command(command)


def run(argv=None):
    """
    Run the command line and return its exit code instead of exiting.

    Args:
        argv: arguments without the program name; sys.argv[1:] when None

    Returns:
        int exit code
    """
    try:
        cli.main(args=argv, prog_name="qspectra")
    except SystemExit as e:
        if e.code is None:
            return EXIT_OK
        return e.code if isinstance(e.code, int) else 1
    return EXIT_OK
