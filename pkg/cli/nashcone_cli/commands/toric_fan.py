# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""Emit the toric model of a family member."""

from nashcone.services.report import toric_fan_report

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
from nashcone_cli.render import echo_json, render_toric_fan


@cli.command("toric-fan")
@family_options
@format_option
@pass_context
@handle_errors
def toric_fan(
    ctx: Context,
    genus: int,
    d1: int,
    d2: int,
    x1: int,
    x2: int,
    output_format: str | None,
):
    """Rays, maximal cones, gamma, intersection table and convexity certificate.

    Requires x1*x2 > 1. The genus is accepted for symmetry with classify and
    does not change the fan.

    \b
    Examples:
      nashcone toric-fan --d1 1 --d2 1 --x1 2 --x2 2
      nashcone toric-fan --d1 2 --d2 3 --x1 1 --x2 2 --format json
    """
    fan = toric_fan_report(params_from(genus, d1, d2, x1, x2))
    if get_output_format(output_format) == "json":
        echo_json(fan)
    else:
        render_toric_fan(console, fan)
