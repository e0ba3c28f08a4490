# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""Configuration management commands."""

from typing import Any, Callable, Dict

import click
import yaml

from nashcone_cli.config import (
    DEFAULT_CONFIG,
    OUTPUT_FORMATS,
    delete_config_value,
    get_config_path,
    get_config_value,
    get_output_format,
    get_scan_workers,
    load_config,
    set_config_value,
)
from nashcone_cli.context import console, err_console
from nashcone_cli.main import cli


def _format_value(value: Any) -> str:
    if value not in OUTPUT_FORMATS:
        raise click.BadParameter(f"output.format must be one of {', '.join(OUTPUT_FORMATS)}")
    return value


def _workers_value(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise click.BadParameter("scan.workers must be an integer >= 1")
    return value


# Keys the CLI reads, with their validators
KNOWN_KEYS: Dict[str, Callable[[Any], Any]] = {
    "output.format": _format_value,
    "scan.workers": _workers_value,
}


@cli.group()
def config():
    """Manage CLI configuration.

    \b
    Configuration priority (highest to lowest):
    1. CLI flags (--format, --workers)
    2. Environment variables (NASHCONE_FORMAT, NASHCONE_SCAN_WORKERS)
    3. Config file (~/.config/nashcone/config.yml)
    4. Defaults

    Solver settings (NASHCONE_BRUTE_BOUND, NASHCONE_LOG_LEVEL,
    NASHCONE_MAX_CERTIFICATE_SUM) are read from the environment or .env only.

    \b
    Examples:
      nashcone config show
      nashcone config set output.format json
      nashcone config get scan.workers
      nashcone config path
    """
    pass


@config.command("show")
def config_show():
    """Show the config file and the values in effect."""
    config_path = get_config_path()
    console.print(f"\n[dim]Config file:[/dim] {config_path}")
    console.print(f"[dim]Exists:[/dim] {config_path.exists()}\n")

    console.print("[bold]Effective settings:[/bold]")
    console.print(f"  [cyan]output.format[/cyan]: {get_output_format()}")
    console.print(f"  [cyan]scan.workers[/cyan]: {get_scan_workers()}")

    config_data = load_config()
    if not config_data:
        console.print("\n[dim]No configuration file values set.[/dim]")
        console.print("Initialize defaults with: [cyan]nashcone config init[/cyan]")
        return

    console.print("\n[bold]File contents:[/bold]")
    for line in yaml.safe_dump(config_data, default_flow_style=False, sort_keys=False).strip().split("\n"):
        console.print(f"  {line}")


@config.command("get")
@click.argument("key")
def config_get(key: str):
    """Get a configuration value.

    \b
    Arguments:
      KEY  Configuration key (output.format or scan.workers)
    """
    value = get_config_value(key)
    if value is None:
        err_console.print(f"[yellow]Key not found:[/yellow] {key}")
        raise SystemExit(1)
    console.print(str(value))


@config.command("set")
@click.argument("key", type=click.Choice(sorted(KNOWN_KEYS)))
@click.argument("value")
def config_set(key: str, value: str):
    """Set a configuration value.

    \b
    Examples:
      nashcone config set output.format json
      nashcone config set scan.workers 4
    """
    try:
        parsed_value = yaml.safe_load(value)
    except yaml.YAMLError:
        parsed_value = value

    set_config_value(key, KNOWN_KEYS[key](parsed_value))
    console.print(f"[green]✓[/green] Set [cyan]{key}[/cyan] = {parsed_value}")


@config.command("unset")
@click.argument("key")
def config_unset(key: str):
    """Remove a configuration value."""
    if delete_config_value(key):
        console.print(f"[green]✓[/green] Removed [cyan]{key}[/cyan]")
    else:
        err_console.print(f"[yellow]Key not found:[/yellow] {key}")
        raise SystemExit(1)


@config.command("init")
@click.option("--force", "-f", is_flag=True, help="Overwrite existing config.")
def config_init(force: bool):
    """Write a config file with the default values."""
    config_path = get_config_path()

    if config_path.exists() and not force:
        console.print(f"[yellow]Config file already exists:[/yellow] {config_path}")
        console.print("\nUse [cyan]--force[/cyan] to overwrite.")
        return

    config_path.parent.mkdir(parents=True, exist_ok=True)
    config_path.write_text(DEFAULT_CONFIG.format(config_path=config_path))
    console.print(f"[green]✓[/green] Created config file: {config_path}")


@config.command("path")
def config_path_command():
    """Show the configuration file path."""
    click.echo(str(get_config_path()))
