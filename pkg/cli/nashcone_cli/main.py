# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""nashcone CLI entry point."""

import logging
import sys

import click
from pydantic import ValidationError
from rich.markup import escape

from nashcone import __version__ as core_version
from nashcone.config import Settings, get_settings
from nashcone_cli import __version__
from nashcone_cli.banner import build_startup_panel
from nashcone_cli.config import get_config_path, get_output_format, get_scan_workers
from nashcone_cli.context import Context, console, err_console

# Context settings for all commands
CONTEXT_SETTINGS = {
    "help_option_names": ["-h", "--help"],
}


def _load_settings() -> Settings:
    try:
        return get_settings()
    except ValidationError as e:
        problems = "; ".join(
            f"NASHCONE_{str(err['loc'][0]).upper()}: {err['msg']}" for err in e.errors()
        )
        raise click.UsageError(f"invalid environment setting: {problems}") from e


def _configure_logging(verbose: bool, settings: Settings) -> None:
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level)
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def _render_startup_panel(settings: Settings) -> None:
    config_path = get_config_path()
    console.print(
        build_startup_panel(
            cli_version=__version__,
            core_version=core_version,
            output_format=get_output_format(),
            scan_workers=get_scan_workers(),
            brute_bound=settings.brute_bound,
            config_path=str(config_path),
            config_exists=config_path.exists(),
        )
    )


@click.group(context_settings=CONTEXT_SETTINGS, invoke_without_command=True)
@click.version_option(version=__version__, prog_name="nashcone")
@click.option(
    "-v", "--verbose",
    is_flag=True,
    help="Enable debug logging on stderr.",
)
@click.option(
    "-q", "--quiet",
    is_flag=True,
    help="Suppress non-essential output. Only show results/errors.",
)
@click.pass_context
def cli(click_ctx: click.Context, verbose: bool, quiet: bool):
    """nashcone - exact certificates for essential divisors and the Nash map.

    Decides contractibility and essentiality of exceptional components from
    intersection data, reproduces the two-component families of 3-fold
    germs and verifies their toric models, all in exact integer arithmetic.

    \b
    Exit codes:
      0   Nash map certified bijective
      10  contractible, bijectivity undetermined
      20  not contractible
      2   usage or input error
      1   internal inconsistency

    \b
    Examples:
      nashcone classify --genus 0 --d1 1 --d2 1 --x1 2 --x2 2
      nashcone scan --range 1..5 --format json
      nashcone check-resolution --input family.json
      nashcone toric-fan --d1 2 --d2 3 --x1 1 --x2 2

    Use 'nashcone COMMAND --help' for more information on a command.
    """
    ctx = click_ctx.ensure_object(Context)
    ctx.verbose = verbose
    ctx.quiet = quiet
    settings = _load_settings()
    _configure_logging(verbose, settings)

    if click_ctx.invoked_subcommand is None:
        _render_startup_panel(settings)


# Import and register command groups after cli is defined
from nashcone_cli.commands import (  # noqa: E402, F401
    check_resolution,
    classify,
    compare,
    config,
    export_family,
    scan,
    self_test,
    toric_fan,
)


def main():
    """Main entry point."""
    try:
        cli()
    except KeyboardInterrupt:
        err_console.print("\n[yellow]Aborted.[/yellow]")
        sys.exit(130)
    except Exception as e:
        # Show concise error; users can use -v for more details
        err_console.print(f"[red]Error:[/red] {type(e).__name__}: {escape(str(e))}")
        sys.exit(1)


if __name__ == "__main__":
    main()
