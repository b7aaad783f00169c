"""Census commands."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import click

from ..services.census_service import CensusService
from ..services.verification_service import VerificationService, summary_table
from ..settings import settings
from ..utils.logging import get_logger

logger = get_logger(__name__)


@click.command("census")
@click.option("--max-exp", type=click.IntRange(min=1), default=None,
              help="Enumerate quotients through order 2^max-exp.")
@click.option("--out", "out_dir", type=click.Path(file_okay=False, path_type=Path), default=None)
@click.option("--resume/--no-resume", default=None, help="Continue an existing census.")
@click.option("--workers", type=click.IntRange(min=1), default=None)
@click.option("--max-nodes", type=click.IntRange(min=1), default=None, help="Per-level node limit.")
def census(max_exp: Optional[int], out_dir: Optional[Path], resume: Optional[bool],
           workers: Optional[int], max_nodes: Optional[int]) -> None:
    """Write the census of 2-quotients and print the per-order summary."""
    service = CensusService(out_dir, workers=workers, max_nodes=max_nodes)
    result = service.run(max_exp, resume=resume)
    manifest = result.manifest
    click.echo(f"{'order':>8}  {'nodes':>8}  {'proper':>8}  s,t:count")
    for level in sorted(manifest.levels, key=lambda s: s.order_exp):
        types = " ".join(f"{k}:{v}" for k, v in level.types.items())
        click.echo(f"{2 ** level.order_exp:>8}  {level.nodes:>8}  {level.proper:>8}  {types}")
    if not manifest.complete:
        click.echo(f"census incomplete: {manifest.incomplete_reason}", err=True)
        raise SystemExit(2)


@click.command("crosscheck")
@click.argument("counts_file", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--census", "census_dir", type=click.Path(file_okay=False, path_type=Path), default=None)
def crosscheck(counts_file: Path, census_dir: Optional[Path]) -> None:
    """Compare per-order proper-map counts with a user-supplied CSV."""
    report = VerificationService(census_dir or settings.census_dir).crosscheck(counts_file)
    click.echo(summary_table([report]))
    if not report.ok:
        raise SystemExit(1)
