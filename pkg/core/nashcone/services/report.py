# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""
Report assembly for classify, check-resolution, scan, toric-fan and self-test

Reports are plain dicts with a fixed key order so that their JSON rendering is
byte-identical across runs. Every certificate is re-verified right before it
is written into a report.
"""
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from ..config import get_settings
from ..errors import ConsistencyError, DomainError, NashconeError
from ..schemas import ComponentVerdict, ExceptionalDivisor, FamilyParams, ResolutionData
from . import criterion, families, toric

logger = logging.getLogger(__name__)

EXIT_CERTIFIED = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_UNDETERMINED = 10
EXIT_NOT_CONTRACTIBLE = 20

VERDICT_KEYS = ("contractible", "grauert_certificate", "components", "nash_bijective")

PARAMETERS = ("d1", "d2", "x1", "x2")


def _checked(data: ResolutionData, label: str, coeffs: Sequence[int], i: Optional[int] = None, j: Optional[int] = None) -> Dict[str, Any]:
    """Re-verify one certificate and list the inequalities it satisfies."""
    F = ExceptionalDivisor(coeffs=tuple(coeffs))
    if not criterion.kleiman_check(data, F):
        raise ConsistencyError(f"certificate {label} = {F.coeffs} is not anti-ample at emission")
    inequalities = [
        f"F.{curve.name} = {criterion.degree(data, F.coeffs, k)} < 0"
        for k, curve in enumerate(data.curves)
    ]
    if i is not None and j is not None:
        if not F.coeffs[i] < F.coeffs[j]:
            raise ConsistencyError(f"certificate {label} = {F.coeffs} violates a_i < a_j at emission")
        inequalities.append(
            f"a_{data.components[i]} = {F.coeffs[i]} < a_{data.components[j]} = {F.coeffs[j]}"
        )
    return {"divisor": label, "coefficients": list(F.coeffs), "inequalities": inequalities}


def _verdict_section(
    data: ResolutionData,
    grauert: Optional[Sequence[int]],
    components: Sequence[ComponentVerdict],
    nash: str,
) -> Tuple[Dict[str, Any], List[Dict[str, Any]]]:
    checks = []
    if grauert is not None:
        checks.append(_checked(data, "F", grauert))
    rendered = []
    for c in components:
        i = data.index_of(c.name)
        certificates = {}
        for other in data.components:
            if other in c.certificates:
                coeffs = c.certificates[other]
                checks.append(_checked(data, f"F_{c.name},{other}", coeffs, i, data.index_of(other)))
                certificates[other] = list(coeffs)
        rendered.append({"name": c.name, "verdict": c.verdict, "certificates": certificates})
    section = {
        "contractible": grauert is not None,
        "grauert_certificate": list(grauert) if grauert is not None else None,
        "components": rendered,
        "nash_bijective": nash,
    }
    return section, checks


def verdict_section(report: Dict[str, Any]) -> Dict[str, Any]:
    return {key: report[key] for key in VERDICT_KEYS}


def exit_code(report: Dict[str, Any]) -> int:
    if not report["contractible"]:
        return EXIT_NOT_CONTRACTIBLE
    if report["nash_bijective"] == "certified":
        return EXIT_CERTIFIED
    return EXIT_UNDETERMINED


def status_label(report: Dict[str, Any]) -> str:
    return {
        EXIT_CERTIFIED: "certified-bijective",
        EXIT_UNDETERMINED: "contractible-undetermined",
        EXIT_NOT_CONTRACTIBLE: "not-contractible",
    }[exit_code(report)]


def toric_fan_report(p: FamilyParams) -> Dict[str, Any]:
    """Rays, maximal cones, gamma, the intersection table and the convexity certificate."""
    model = toric.build_fan(p)
    ok, table = toric.verify_intor(model, p)
    if not ok:
        raise ConsistencyError(
            f"toric intersection numbers disagree with the family rows for {p.key}",
            details=[c.model_dump() for c in table],
        )
    on_a, on_f = toric.convexity_certificate(model, p)
    return {
        "rays": {name: list(v.coords) for name, v in model.fan.rays.items()},
        "max_cones": [list(c) for c in model.fan.max_cones],
        "gamma": [list(e.coords) for e in model.gamma.edges],
        "intersections": [
            {"label": c.label, "expected": c.expected, "computed": c.computed} for c in table
        ],
        "convexity_form": list(model.convexity_form.coords),
        "convexity_certificate": [on_a, on_f],
    }


def _toric_section(p: FamilyParams) -> Optional[Dict[str, Any]]:
    if p.x1 * p.x2 <= 1:
        return None
    report = toric.toricity_report(p)
    section: Dict[str, Any] = {
        "is_toric": report.is_toric,
        "smooth_representatives": list(report.smooth_representatives),
        "note": report.distinguishing_note,
    }
    if report.is_toric:
        section["fan"] = toric_fan_report(p)
    return section


def classify_report(p: FamilyParams) -> Dict[str, Any]:
    result = families.classify(p)
    data = families.make_resolution_data(p)
    grauert = result.grauert_certificate if result.contractible else None
    verdicts, checks = _verdict_section(data, grauert, result.components, result.nash)
    return {
        "input": {"genus": p.genus, "d1": p.d1, "d2": p.d2, "x1": p.x1, "x2": p.x2},
        **verdicts,
        "interval": {"lower": result.interval[0], "upper": result.interval[1], "kind": result.feasibility.kind},
        "checks": checks,
        "construction": [t.model_dump() for t in result.construction],
        "toric": _toric_section(p),
    }


def resolution_report(data: ResolutionData) -> Dict[str, Any]:
    """Grauert certificate and essentiality verdicts for arbitrary resolution data."""
    grauert = criterion.find_grauert_certificate(data)
    nash = criterion.certify_nash_bijective(data)
    verdicts, checks = _verdict_section(
        data, grauert.coeffs if grauert is not None else None, nash.components, nash.verdict
    )
    report: Dict[str, Any] = {
        "input": {
            "components": list(data.components),
            "curves": [
                {"name": c.name, "component": c.component, "intersections": list(c.intersections)}
                for c in data.curves
            ],
        },
        **verdicts,
        "checks": checks,
        "toric": None,
    }
    matrix = criterion.surface_intersection_matrix(data)
    if matrix is not None:
        definite = criterion.intersection_matrix_negative_definite(matrix)
        if definite != (grauert is not None):
            raise ConsistencyError(
                "negative definiteness and the Grauert certificate disagree",
                details={"matrix": matrix, "negative_definite": definite},
            )
        report["negative_definite"] = definite
    return report


def parse_range(text: str) -> List[Tuple[int, int]]:
    """
    "LO..HI" for all four parameters, or four comma-separated "LO..HI" in the
    order d1, d2, x1, x2
    """
    parts = [s.strip() for s in text.split(",")]
    if len(parts) == 1:
        parts = parts * len(PARAMETERS)
    if len(parts) != len(PARAMETERS):
        raise DomainError(f"range needs 1 or {len(PARAMETERS)} parts, got {len(parts)}")
    bounds = []
    for name, part in zip(PARAMETERS, parts):
        lo, sep, hi = part.partition("..")
        try:
            bound = (int(lo), int(hi if sep else lo))
        except ValueError as e:
            raise DomainError(f"range for {name} must look like LO..HI, got {part!r}") from e
        if bound[0] < 1:
            raise DomainError(f"range for {name} starts at {bound[0]}; need {name[0]}_i > 0")
        if bound[0] > bound[1]:
            raise DomainError(f"range for {name} is empty: {part}")
        bounds.append(bound)
    return bounds


def grid(bounds: Sequence[Tuple[int, int]], genus: int = 0) -> List[FamilyParams]:
    """Every parameter tuple in the box, lexicographic in (d1, d2, x1, x2)."""
    axes = [range(lo, hi + 1) for lo, hi in bounds]
    return [
        FamilyParams(genus=genus, d1=d1, d2=d2, x1=x1, x2=x2)
        for d1, d2, x1, x2 in itertools.product(*axes)
    ]


def summarize(p: FamilyParams) -> Dict[str, Any]:
    report = classify_report(p)
    return {
        "genus": p.genus,
        "d1": p.d1,
        "d2": p.d2,
        "x1": p.x1,
        "x2": p.x2,
        "status": status_label(report),
        "grauert_certificate": report["grauert_certificate"],
        "components": {c["name"]: c["verdict"] for c in report["components"]},
    }


def scan_rows(params: Sequence[FamilyParams], workers: Optional[int] = None) -> List[Dict[str, Any]]:
    """One summary per tuple, sorted lexicographically whatever the evaluation order."""
    workers = workers or get_settings().scan_workers
    if workers > 1 and len(params) > 1:
        logger.info(f"scanning {len(params)} tuples on {workers} processes")
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(summarize, params))
    else:
        rows = [summarize(p) for p in params]
    return sorted(rows, key=lambda r: (r["genus"], r["d1"], r["d2"], r["x1"], r["x2"]))


def scan_counts(rows: Iterable[Dict[str, Any]]) -> Dict[str, int]:
    counts = {"certified-bijective": 0, "contractible-undetermined": 0, "not-contractible": 0}
    for r in rows:
        counts[r["status"]] += 1
    return counts


class SelfTestCheck:
    """Pass/fail tally for one kind of cross-check"""

    def __init__(self, name: str):
        self.name = name
        self.passed = 0
        self.failed = 0
        self.failures: List[str] = []

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "failures": self.failures[:20],  # First 20 only
        }

    def record(self, ok: bool, label: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(label)


def self_test(params: Sequence[FamilyParams], bound: Optional[int] = None) -> List[SelfTestCheck]:
    """Closed form, toric, regularity/convexity and brute-force oracle checks over a grid."""
    bound = bound or get_settings().brute_bound
    checks = {
        name: SelfTestCheck(name)
        for name in ("closed_form_vs_solver", "toric_intersections", "regularity_convexity", "brute_force_oracle")
    }
    for p in params:
        label = str(p.key)
        try:
            families.classify(p)
            checks["closed_form_vs_solver"].record(True, label)
        except ConsistencyError:
            checks["closed_form_vs_solver"].record(False, label)

        if p.x1 * p.x2 > 1:
            try:
                model = toric.build_fan(p)
                toric.convexity_certificate(model, p)
                checks["regularity_convexity"].record(True, label)
                checks["toric_intersections"].record(toric.verify_intor(model, p)[0], label)
            except NashconeError:
                checks["regularity_convexity"].record(False, label)
        else:
            try:
                toric.build_fan(p)
                checks["regularity_convexity"].record(False, label)
            except DomainError:
                checks["regularity_convexity"].record(True, label)

        data = families.make_resolution_data(p)
        agree = (criterion.find_grauert_certificate(data) is None) == (
            criterion.brute_force_grauert(data, bound) is None
        )
        for i, j in itertools.permutations(range(data.size), 2):
            agree = agree and (criterion.find_F_ij(data, i, j) is None) == (
                criterion.brute_force_F_ij(data, i, j, bound) is None
            )
        checks["brute_force_oracle"].record(agree, label)
    return list(checks.values())
