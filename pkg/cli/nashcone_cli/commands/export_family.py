# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""Write the resolution file of a family member."""

from pathlib import Path

import click

from nashcone.resolution_file import dump_resolution_file
from nashcone.services.families import make_resolution_data

from nashcone_cli.context import Context, console, family_options, handle_errors, params_from, pass_context
from nashcone_cli.main import cli


@cli.command("export-family")
@family_options
@click.option(
    "--output", "-o", "output_path", type=click.Path(dir_okay=False, path_type=Path),
    default=None, help="Write to a file instead of stdout.",
)
@pass_context
@handle_errors
def export_family(
    ctx: Context,
    genus: int,
    d1: int,
    d2: int,
    x1: int,
    x2: int,
    output_path: Path | None,
):
    """Serialize the intersection rows of a family member for check-resolution.

    \b
    Examples:
      nashcone export-family --d1 1 --d2 1 --x1 2 --x2 2 > family.json
      nashcone export-family --d1 3 --d2 5 --x1 2 --x2 4 -o family.json
    """
    text = dump_resolution_file(make_resolution_data(params_from(genus, d1, d2, x1, x2)))
    if output_path is None:
        click.echo(text, nl=False)
        return
    output_path.write_text(text, encoding="utf-8")
    ctx.get_console().print(f"[green]✓[/green] Wrote {output_path}")
