# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""Classify every family member in a parameter box."""

import click

from nashcone.errors import DomainError
from nashcone.services.report import grid, parse_range, scan_counts, scan_rows

from nashcone_cli.config import get_output_format, get_scan_workers
from nashcone_cli.context import Context, console, format_option, handle_errors, pass_context
from nashcone_cli.main import cli
from nashcone_cli.render import echo_json, render_scan


@cli.command()
@click.option("--range", "range_text", required=True, help="LO..HI for all of d1,d2,x1,x2, or four comma-separated ranges.")
@click.option("--genus", "-g", type=click.IntRange(min=0), default=0, show_default=True, help="Genus of the curve C.")
@click.option("--workers", "-w", type=click.IntRange(min=1), default=None, help="Worker processes (default from NASHCONE_SCAN_WORKERS or config scan.workers).")
@format_option
@pass_context
@handle_errors
def scan(ctx: Context, range_text: str, genus: int, workers: int | None, output_format: str | None):
    """Summarize verdicts over a box of (d1, d2, x1, x2), lexicographically.

    \b
    Examples:
      nashcone scan --range 1..2
      nashcone scan --range 1..5,1..5,1..2,1..2 --format json
      nashcone scan --range 1..5 --workers 4
    """
    try:
        bounds = parse_range(range_text)
    except DomainError as e:
        raise click.BadParameter(e.message, param_hint="--range") from e

    rows = scan_rows(grid(bounds, genus), get_scan_workers(workers))
    counts = scan_counts(rows)
    if get_output_format(output_format) == "json":
        echo_json({"rows": rows, "counts": counts})
    else:
        render_scan(console, rows, counts, totals_only=ctx.quiet)
