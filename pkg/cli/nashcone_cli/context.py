# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""Shared CLI context and utilities."""

import functools
import io

import click
from rich.console import Console
from rich.markup import escape

from nashcone.errors import (
    ConsistencyError,
    DomainError,
    ResolutionFileError,
    StructuralError,
)
from nashcone.schemas import FamilyParams
from nashcone.services.report import EXIT_INTERNAL, EXIT_USAGE

# Rich console for output
console = Console()
err_console = Console(stderr=True)

# Quiet console that discards output
_quiet_console = Console(file=io.StringIO(), force_terminal=False)


class Context:
    """CLI context object passed to commands."""

    def __init__(self):
        self.verbose: bool = False
        self.quiet: bool = False

    def get_console(self) -> Console:
        """Get the appropriate console based on quiet mode."""
        if self.quiet:
            return _quiet_console
        return console


pass_context = click.make_pass_decorator(Context, ensure=True)


def family_options(func):
    """--genus --d1 --d2 --x1 --x2, validated against genus >= 0, d_i > 0, x_i > 0."""
    def positive(constraint: str):
        def callback(click_ctx, param, value):
            if value is not None and value < 1:
                raise click.BadParameter(f"{param.name} = {value} violates {constraint}")
            return value
        return callback

    def nonnegative(click_ctx, param, value):
        if value < 0:
            raise click.BadParameter(f"genus = {value} must be >= 0")
        return value

    for name, constraint in reversed((("d1", "d_i > 0"), ("d2", "d_i > 0"), ("x1", "x_i > 0"), ("x2", "x_i > 0"))):
        func = click.option(
            f"--{name}", type=int, required=True, callback=positive(constraint),
            help=f"Family parameter {name} ({constraint}).",
        )(func)
    func = click.option(
        "--genus", "-g", type=int, default=0, show_default=True, callback=nonnegative,
        help="Genus of the curve C.",
    )(func)
    return func


def params_from(genus: int, d1: int, d2: int, x1: int, x2: int) -> FamilyParams:
    return FamilyParams(genus=genus, d1=d1, d2=d2, x1=x1, x2=x2)


def format_option(func):
    return click.option(
        "--format", "output_format", type=click.Choice(["human", "json"]), default=None,
        help="Report format (default from NASHCONE_FORMAT or config output.format).",
    )(func)


def handle_errors(func):
    """Map library errors to exit codes: usage and input errors 2, inconsistencies 1."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ResolutionFileError as e:
            err_console.print(f"[red]Error:[/red] {escape(e.message)}")
            if e.line is not None:
                err_console.print(f"  at line {e.line}")
            for offender in e.offenders:
                err_console.print(f"  - {escape(offender)}")
            raise SystemExit(EXIT_USAGE) from e
        except (DomainError, StructuralError) as e:
            err_console.print(f"[red]Error:[/red] {escape(e.message)}")
            raise SystemExit(EXIT_USAGE) from e
        except ConsistencyError as e:
            err_console.print(f"[red]Internal inconsistency:[/red] {escape(e.message)}")
            if e.details is not None:
                err_console.print(f"[dim]{escape(str(e.details))}[/dim]")
            raise SystemExit(EXIT_INTERNAL) from e
    return wrapper
