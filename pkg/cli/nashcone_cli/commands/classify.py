# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""Classify one member of the two-component family."""

from nashcone.services.report import classify_report, exit_code, status_label

from nashcone_cli.config import get_output_format
from nashcone_cli.context import (
    Context,
    console,
    family_options,
    format_option,
    handle_errors,
    params_from,
    pass_context,
)
from nashcone_cli.main import cli
from nashcone_cli.render import echo_json, render_classify


@cli.command()
@family_options
@format_option
@pass_context
@handle_errors
def classify(
    ctx: Context,
    genus: int,
    d1: int,
    d2: int,
    x1: int,
    x2: int,
    output_format: str | None,
):
    """Decide contractibility and Nash bijectivity for (g, d1, d2, x1, x2).

    The exit code carries the verdict: 0 certified bijective, 10 contractible
    but undetermined, 20 not contractible.

    \b
    Examples:
      nashcone classify --d1 1 --d2 1 --x1 2 --x2 2
      nashcone classify --genus 2 --d1 1 --d2 1 --x1 1 --x2 3 --format json
    """
    report = classify_report(params_from(genus, d1, d2, x1, x2))
    if get_output_format(output_format) == "json":
        echo_json(report)
    else:
        if ctx.quiet:
            console.print(status_label(report))
        else:
            render_classify(console, report)
    raise SystemExit(exit_code(report))
