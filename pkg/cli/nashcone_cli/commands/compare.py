# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""Compare two germs by their smooth representatives."""

import click

from nashcone.schemas import FamilyParams
from nashcone.services.toric import compare_germs

from nashcone_cli.config import get_output_format
from nashcone_cli.context import console, format_option, handle_errors
from nashcone_cli.main import cli
from nashcone_cli.render import echo_json

FIELDS = ("genus", "d1", "d2", "x1", "x2")


def parse_germ(click_ctx, param, value: str) -> FamilyParams:
    parts = value.split(",")
    if len(parts) != len(FIELDS):
        raise click.BadParameter(f"expected G,D1,D2,X1,X2, got {value!r}")
    try:
        numbers = [int(p) for p in parts]
    except ValueError as e:
        raise click.BadParameter(f"expected integers, got {value!r}") from e
    if numbers[0] < 0:
        raise click.BadParameter("genus must be >= 0")
    for name, n in zip(FIELDS[1:], numbers[1:]):
        if n < 1:
            raise click.BadParameter(f"{name} = {n} violates {name[0]}_i > 0")
    return FamilyParams(**dict(zip(FIELDS, numbers)))


@cli.command()
@click.argument("first", callback=parse_germ)
@click.argument("second", callback=parse_germ)
@format_option
@handle_errors
def compare(first: FamilyParams, second: FamilyParams, output_format: str | None):
    """Tell two germs apart, if their smooth representatives can.

    \b
    Arguments:
      FIRST, SECOND  Germs as G,D1,D2,X1,X2 (x1*x2 > 1)

    The answer is "distinct" or "undetermined"; equal invariants never
    prove the germs isomorphic.

    \b
    Examples:
      nashcone compare 0,1,1,2,2 2,1,1,2,2
    """
    verdict = compare_germs(first, second)
    if get_output_format(output_format) == "json":
        echo_json({"first": list(first.key), "second": list(second.key), "verdict": verdict})
    else:
        console.print(verdict)
