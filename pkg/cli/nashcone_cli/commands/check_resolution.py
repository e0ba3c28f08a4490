# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""Certificates for user-supplied resolution data."""

from pathlib import Path

import click

from nashcone.errors import ResolutionFileError
from nashcone.resolution_file import parse_resolution_file
from nashcone.services.report import exit_code, resolution_report, status_label

from nashcone_cli.config import get_output_format
from nashcone_cli.context import Context, console, format_option, handle_errors, pass_context
from nashcone_cli.main import cli
from nashcone_cli.render import echo_json, render_resolution


@cli.command("check-resolution")
@click.option(
    "--input", "-i", "input_path", required=True,
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Resolution file (JSON).",
)
@format_option
@pass_context
@handle_errors
def check_resolution(ctx: Context, input_path: Path, output_format: str | None):
    """Search Grauert and F_ij certificates for arbitrary intersection data.

    \b
    The file lists the exceptional components and curve generators:
      {"components": ["E1"],
       "curves": [{"name": "z", "component": "E1", "intersections": [-1]}]}

    \b
    Examples:
      nashcone export-family --d1 1 --d2 1 --x1 2 --x2 2 -o family.json
      nashcone check-resolution --input family.json
    """
    try:
        text = input_path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ResolutionFileError(f"{input_path} is not UTF-8 text") from e
    report = resolution_report(parse_resolution_file(text))
    if get_output_format(output_format) == "json":
        echo_json(report)
    else:
        if ctx.quiet:
            console.print(status_label(report))
        else:
            render_resolution(console, report)
    raise SystemExit(exit_code(report))
