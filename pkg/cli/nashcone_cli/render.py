# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""Human-readable rendering of reports."""

import json
from typing import Any, Dict, List, Sequence

import click
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from nashcone.services.report import SelfTestCheck, status_label

STATUS_STYLE = {
    "certified-bijective": "green",
    "contractible-undetermined": "yellow",
    "not-contractible": "red",
}


def echo_json(data: Any) -> None:
    """Plain stdout, no rich wrapping, so the bytes are stable."""
    click.echo(json.dumps(data, indent=2))


def _coeffs(values: Sequence[int] | None) -> str:
    if values is None:
        return "-"
    return "(" + ", ".join(str(v) for v in values) + ")"


def render_verdicts(out: Console, report: Dict[str, Any]) -> None:
    status = status_label(report)
    out.print(f"\n[bold]Verdict:[/bold] [{STATUS_STYLE[status]}]{status}[/{STATUS_STYLE[status]}]")
    out.print(f"Contractible: {'yes' if report['contractible'] else 'no'}")
    out.print(f"Grauert certificate F: {_coeffs(report['grauert_certificate'])}")

    table = Table(title="Components")
    table.add_column("Component", style="cyan")
    table.add_column("Verdict")
    table.add_column("Certificates F_ij")
    for c in report["components"]:
        certificates = ", ".join(
            f"{other}: {_coeffs(coeffs)}" for other, coeffs in c["certificates"].items()
        )
        style = "green" if c["verdict"] == "certified" else "yellow"
        table.add_row(escape(c["name"]), f"[{style}]{c['verdict']}[/{style}]", escape(certificates) or "-")
    out.print(table)
    out.print(f"Nash map bijective: {report['nash_bijective']}")


def render_checks(out: Console, checks: List[Dict[str, Any]]) -> None:
    if not checks:
        return
    out.print("\n[bold]Checked inequalities[/bold]")
    for check in checks:
        out.print(f"  {escape(check['divisor'])} = {_coeffs(check['coefficients'])}")
        for line in check["inequalities"]:
            out.print(f"    {escape(line)}")


def render_construction(out: Console, report: Dict[str, Any]) -> None:
    table = Table(title="Ruled surfaces")
    table.add_column("Surface", style="cyan")
    table.add_column("deg_C H", justify="right")
    table.add_column("deg_F H", justify="right")
    table.add_column("H* ample")
    table.add_column("C.C", justify="right")
    table.add_column("C~.C~", justify="right")
    for t in report["construction"]:
        table.add_row(
            t["component"],
            str(t["degree_on_section"]),
            str(t["degree_on_fiber"]),
            "yes" if t["dual_is_ample"] else "no",
            str(t["section_self_intersection"]),
            str(t["infinity_self_intersection"]),
        )
    out.print(table)


def render_toric_fan(out: Console, fan: Dict[str, Any]) -> None:
    rays = Table(title="Rays")
    rays.add_column("Ray", style="cyan")
    rays.add_column("Vector")
    for name, coords in fan["rays"].items():
        rays.add_row(name, _coeffs(coords))
    out.print(rays)
    out.print("Maximal cones: " + ", ".join("<" + ",".join(c) + ">" for c in fan["max_cones"]))
    out.print("gamma: <" + ", ".join(_coeffs(e) for e in fan["gamma"]) + ">")

    table = Table(title="Intersection numbers")
    table.add_column("Product")
    table.add_column("Expected", justify="right")
    table.add_column("Computed", justify="right")
    for row in fan["intersections"]:
        table.add_row(escape(row["label"]), str(row["expected"]), str(row["computed"]))
    out.print(table)
    on_a, on_f = fan["convexity_certificate"]
    out.print(f"Convexity form m = {_coeffs(fan['convexity_form'])}: (m, v_a) = {on_a}, (m, v_f) = {on_f}")


def render_toric_section(out: Console, toric: Dict[str, Any] | None) -> None:
    if toric is None:
        return
    out.print("\n[bold]Toric model[/bold]")
    out.print(f"Toric: {'yes' if toric['is_toric'] else 'no'}")
    out.print(f"Smooth representatives: {_coeffs(toric['smooth_representatives'])}")
    out.print(f"[dim]{escape(toric['note'])}[/dim]")
    if "fan" in toric:
        render_toric_fan(out, toric["fan"])


def render_classify(out: Console, report: Dict[str, Any]) -> None:
    p = report["input"]
    out.print(
        f"[bold]Family[/bold] g={p['genus']} d1={p['d1']} d2={p['d2']} x1={p['x1']} x2={p['x2']}"
    )
    interval = report["interval"]
    out.print(f"Interval: {interval['lower']} < a1/a2 < {interval['upper']} ({interval['kind']})")
    render_verdicts(out, report)
    render_checks(out, report["checks"])
    render_construction(out, report)
    render_toric_section(out, report["toric"])


def render_resolution(out: Console, report: Dict[str, Any]) -> None:
    data = report["input"]
    out.print(
        f"[bold]Resolution[/bold] with {len(data['components'])} component(s), "
        f"{len(data['curves'])} curve class(es)"
    )
    render_verdicts(out, report)
    render_checks(out, report["checks"])
    if "negative_definite" in report:
        out.print(f"Intersection matrix negative definite: {'yes' if report['negative_definite'] else 'no'}")


def render_scan(out: Console, rows: List[Dict[str, Any]], counts: Dict[str, int], totals_only: bool = False) -> None:
    if totals_only:
        out.print(", ".join(f"{status}: {count}" for status, count in counts.items()))
        return
    table = Table(title="Family scan")
    for column in ("g", "d1", "d2", "x1", "x2"):
        table.add_column(column, justify="right")
    table.add_column("Status")
    table.add_column("F")
    for r in rows:
        style = STATUS_STYLE[r["status"]]
        table.add_row(
            str(r["genus"]), str(r["d1"]), str(r["d2"]), str(r["x1"]), str(r["x2"]),
            f"[{style}]{r['status']}[/{style}]",
            _coeffs(r["grauert_certificate"]),
        )
    out.print(table)
    out.print(", ".join(f"{status}: {count}" for status, count in counts.items()))


def render_self_test(out: Console, checks: List[SelfTestCheck]) -> None:
    table = Table(title="Self-test")
    table.add_column("Check", style="cyan")
    table.add_column("Passed", justify="right")
    table.add_column("Failed", justify="right")
    for check in checks:
        style = "green" if check.ok else "red"
        table.add_row(check.name, str(check.passed), f"[{style}]{check.failed}[/{style}]")
    out.print(table)
    for check in checks:
        for label in check.failures[:20]:
            out.print(f"[red]✗[/red] {check.name}: {escape(label)}")
