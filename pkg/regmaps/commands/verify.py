"""The verify command."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import click

from ..services.verification_service import CLAIMS, VerificationService, summary_table, write_reports
from ..utils.logging import get_logger

logger = get_logger(__name__)


@click.command("verify")
@click.argument("claim", type=click.Choice(CLAIMS))
@click.option("--n", type=int, default=None)
@click.option("--s", type=int, default=None)
@click.option("--t", type=int, default=None)
@click.option("--all", "all_cases", is_flag=True, help="Every legal (s, t) at this n.")
@click.option("--max-n", type=int, default=None, help="Census-wide scans up to this order exponent.")
@click.option("--census", "census_dir", type=click.Path(file_okay=False, path_type=Path), default=None)
@click.option("--preset", "family", type=str, default=None, help="Check a preset instead of the census.")
@click.option("--counts", "counts_file", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--report", "report_path", type=click.Path(dir_okay=False, path_type=Path), default=None)
def verify(claim: str, n: Optional[int], s: Optional[int], t: Optional[int], all_cases: bool,
           max_n: Optional[int], census_dir: Optional[Path], family: Optional[str],
           counts_file: Optional[Path], report_path: Optional[Path]) -> None:
    """Check CLAIM and append the reports; exit 1 if any report fails."""
    service = VerificationService(census_dir)
    reports = service.run(claim, n=n, s=s, t=t, all_cases=all_cases, max_n=max_n,
                          family=family, counts_file=counts_file)
    path = write_reports(reports, report_path)
    click.echo(summary_table(reports))
    logger.info(f"Appended {len(reports)} report(s) to {path}")
    failed = [r for r in reports if not r.ok]
    if failed:
        raise SystemExit(1)
