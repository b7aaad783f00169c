"""Commands on a single presentation: order, analyze, dual."""

from __future__ import annotations

import functools
import json
from pathlib import Path
from typing import Callable, Optional

import click

from ..core.coset_table import element_order
from ..core.map_analysis import analyze, dual
from ..core.presets import family_names, preset
from ..core.todd_coxeter import regular_table
from ..models import EnumerationLimits, Presentation
from ..utils.logging import get_logger

logger = get_logger(__name__)


def presentation_options(command: Callable) -> Callable:
    """--preset/--n/--s/--t or --file, plus enumeration limits."""

    @click.option("--preset", "family", type=str, default=None,
                  help=f"Preset family ({', '.join(family_names())}).")
    @click.option("--n", type=int, default=None)
    @click.option("--s", type=int, default=None)
    @click.option("--t", type=int, default=None)
    @click.option("--file", "path", type=click.Path(exists=True, dir_okay=False, path_type=Path),
                  default=None, help="Presentation file, one relator per line.")
    @click.option("--max-cosets", type=int, default=None, help="Coset limit for the enumeration.")
    @click.option("--strategy", type=click.Choice(["felsch", "hlt"]), default=None)
    @functools.wraps(command)
    def wrapper(family: Optional[str], n: Optional[int], s: Optional[int], t: Optional[int],
                path: Optional[Path], max_cosets: Optional[int], strategy: Optional[str], **kwargs):
        presentation = load_presentation(family, path, n=n, s=s, t=t)
        overrides = {k: v for k, v in (("max_cosets", max_cosets), ("strategy", strategy)) if v is not None}
        limits = EnumerationLimits(**overrides)
        return command(presentation=presentation, limits=limits, **kwargs)

    return wrapper


def load_presentation(family: Optional[str], path: Optional[Path], **params: Optional[int]) -> Presentation:
    if (family is None) == (path is None):
        raise click.UsageError("give exactly one of --preset and --file")
    if path is not None:
        return Presentation.from_text(path.read_text())
    return preset(family, **{k: v for k, v in params.items() if v is not None})


@click.command("order")
@presentation_options
def order(presentation: Presentation, limits: EnumerationLimits) -> None:
    """Print the group order and the true orders of r0 r1, r1 r2, r0 r2."""
    table = regular_table(presentation, limits)
    click.echo(f"order {table.size}")
    for label, word in (("r0 r1", (0, 1)), ("r1 r2", (1, 2)), ("r0 r2", (0, 2))):
        click.echo(f"o({label}) {element_order(table, word)}")


@click.command("analyze")
@presentation_options
def analyze_command(presentation: Presentation, limits: EnumerationLimits) -> None:
    """Print the regular-map record of the presentation as JSON."""
    table = regular_table(presentation, limits)
    click.echo(analyze(table).model_dump_json(indent=2))


@click.command("dual")
@presentation_options
def dual_command(presentation: Presentation, limits: EnumerationLimits) -> None:
    """Print the record of the dual map and both canonical digests."""
    table = regular_table(presentation, limits)
    swapped = dual(table)
    record = analyze(swapped)
    click.echo(json.dumps({
        "map_digest": table.digest,
        "dual_digest": swapped.digest,
        "self_dual": table.key == swapped.key,
        "dual": record.model_dump(),
    }, indent=2))
