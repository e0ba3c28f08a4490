# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""Startup banner rendering for the nashcone CLI."""

from __future__ import annotations

from rich.console import Group
from rich.panel import Panel
from rich.text import Text


def build_startup_panel(
    *,
    cli_version: str | None = None,
    core_version: str | None = None,
    output_format: str = "human",
    scan_workers: int = 1,
    brute_bound: int | None = None,
    config_path: str | None = None,
    config_exists: bool = False,
):
    """Build the startup banner panel."""
    lines: list[str] = []
    title = Text("nashcone", style="bold cyan")

    if cli_version:
        lines.append(f"CLI: {cli_version}")
    if core_version and core_version != cli_version:
        lines.append(f"Core: {core_version}")

    lines.append(f"Format: {output_format}")
    lines.append(f"Scan workers: {scan_workers}")
    if brute_bound is not None:
        lines.append(f"Brute-force bound: {brute_bound}")
    if config_path:
        state = "" if config_exists else " (not created)"
        lines.append(f"Config: {config_path}{state}")

    lines.extend(
        [
            "",
            "Try:",
            "  nashcone classify --d1 1 --d2 1 --x1 2 --x2 2",
            "  nashcone scan --range 1..3",
            "  nashcone toric-fan --d1 1 --d2 1 --x1 2 --x2 2",
        ]
    )

    return Panel(Group(*lines), title=title)
