"""Command-line application for regmaps."""

import sys
from typing import Any, Optional

import click
from pydantic import ValidationError

from . import __version__
from .commands import census, groups, verify
from .errors import CosetLimitExceeded, RegMapsError
from .utils.logging import get_logger, setup_logging

logger = get_logger(__name__)

USAGE_ERROR = 2
FAILURE = 1


class RegMapsGroup(click.Group):
    """Click group that turns library errors into exit statuses."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except CosetLimitExceeded as e:
            logger.error(f"Enumeration stopped: {str(e)}")
            click.echo(f"error: {e}", err=True)
            ctx.exit(USAGE_ERROR)
        except (RegMapsError, ValidationError) as e:
            logger.error(f"{type(e).__name__}: {str(e)}")
            click.echo(f"error: {e}", err=True)
            ctx.exit(USAGE_ERROR)


@click.group(cls=RegMapsGroup)
@click.version_option(__version__, prog_name="regmaps")
@click.option("--log-level", type=click.Choice(["debug", "info", "warning", "error", "critical"]),
              default=None, help="Overrides REGMAPS_LOG_LEVEL.")
def cli(log_level: Optional[str]) -> None:
    """Regular maps with 2-group automorphism groups."""
    setup_logging(log_level)


cli.add_command(groups.order)
cli.add_command(groups.analyze_command)
cli.add_command(groups.dual_command)
cli.add_command(census.census)
cli.add_command(census.crosscheck)
cli.add_command(verify.verify)


def run_cli(argv: Optional[list[str]] = None) -> None:
    """Run the command group as a script."""
    cli.main(args=argv, prog_name="regmaps")


if __name__ == "__main__":
    run_cli(sys.argv[1:])
