# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""
Two-component families of 3-fold germs

Two ruled surfaces S_1, S_2 over a curve C of genus g, glued along C inside a
threefold M. The resolution data only depends on (d1, d2, x1, x2):

    C . S_i = -d_j,   F_i . S_i = -x_i,   F_j . S_i = 1    ({i, j} = {1, 2})

Every verdict is computed twice, once from the interval 1/x1 < a1/a2 < x2 and
once by the general certificate search, and the two have to agree.
"""
import logging
from fractions import Fraction
from math import floor
from typing import Dict, List, Optional, Tuple

from ..errors import ConsistencyError
from ..schemas import (
    ComponentVerdict,
    CurveClass,
    FamilyClassification,
    FamilyParams,
    IntervalFeasibility,
    ResolutionData,
    Side,
    SurfaceTwist,
)
from . import criterion

logger = logging.getLogger(__name__)

COMPONENTS = ("S1", "S2")


def make_resolution_data(p: FamilyParams) -> ResolutionData:
    """Components S1, S2 and the curve generators C, F1, F2 with their intersection rows."""
    return ResolutionData(
        components=COMPONENTS,
        curves=(
            CurveClass(name="C", component=None, intersections=(-p.d2, -p.d1)),
            CurveClass(name="F1", component="S1", intersections=(-p.x1, 1)),
            CurveClass(name="F2", component="S2", intersections=(1, -p.x2)),
        ),
    )


def simplest_between(lo: Fraction, hi: Optional[Fraction]) -> Fraction:
    """
    The fraction with smallest numerator and denominator in the open interval (lo, hi)

    hi=None stands for +infinity. Stern-Brocot descent; lo must be >= 0.
    """
    if lo < 0:
        raise ValueError("lower end must be nonnegative")
    if hi is not None and hi <= lo:
        raise ValueError(f"empty interval ({lo}, {hi})")
    whole = floor(lo)
    if hi is None or whole + 1 < hi:
        return Fraction(whole + 1)
    # Both ends sit in (whole, whole + 1]
    inner = simplest_between(1 / (hi - whole), None if lo == whole else 1 / (lo - whole))
    return whole + 1 / inner


def _as_pair(r: Fraction) -> Tuple[int, int]:
    return (r.numerator, r.denominator)


def interval_bounds(p: FamilyParams) -> Tuple[Fraction, Fraction]:
    return (Fraction(1, p.x1), Fraction(p.x2))


def interval_feasibility(p: FamilyParams) -> IntervalFeasibility:
    """Integer points of 1/x1 < a1/a2 < x2 on each side of the diagonal, with minimal witnesses."""
    lo, hi = interval_bounds(p)
    if not lo < hi:
        return IntervalFeasibility(kind="none")

    witnesses: Dict[Side, Tuple[int, int]] = {}
    if lo < 1:
        witnesses["alpha1_lt_alpha2"] = _as_pair(simplest_between(lo, min(hi, Fraction(1))))
    if hi > 1:
        witnesses["alpha2_lt_alpha1"] = _as_pair(simplest_between(max(lo, Fraction(1)), hi))
    sides: List[Side] = list(witnesses)
    kind = "two_sided" if len(sides) == 2 else "one_sided"
    return IntervalFeasibility(
        kind=kind,
        sides=sides,
        witnesses=witnesses,
        grauert_witness=_as_pair(simplest_between(lo, hi)),
    )


def twist_degrees(p: FamilyParams, i: int) -> Tuple[int, int]:
    """(deg_{C_i} H_i, deg_{F_i} H_i) = (-d_j, -x_i) for i in {1, 2}."""
    if i == 1:
        return (-p.d2, -p.x1)
    if i == 2:
        return (-p.d1, -p.x2)
    raise ValueError(f"component index must be 1 or 2, got {i}")


def self_intersections(p: FamilyParams, i: int) -> Tuple[int, int]:
    """(C_i . C_i, C~_i . C~_i) on S_i: the zero section and the section at infinity."""
    d = {1: p.d1, 2: p.d2}.get(i)
    if d is None:
        raise ValueError(f"component index must be 1 or 2, got {i}")
    return (-d, d)


def surface_twists(p: FamilyParams) -> List[SurfaceTwist]:
    result = []
    for i, name in enumerate(COMPONENTS, start=1):
        on_section, on_fiber = twist_degrees(p, i)
        section, infinity = self_intersections(p, i)
        result.append(
            SurfaceTwist(
                component=name,
                degree_on_section=on_section,
                degree_on_fiber=on_fiber,
                dual_is_ample=on_section < 0 and on_fiber < 0,
                section_self_intersection=section,
                infinity_self_intersection=infinity,
            )
        )
    return result


def _closed_form_components(feasibility: IntervalFeasibility) -> List[ComponentVerdict]:
    verdicts = []
    for name, side, other in (
        ("S1", "alpha1_lt_alpha2", "S2"),
        ("S2", "alpha2_lt_alpha1", "S1"),
    ):
        witness = feasibility.witnesses.get(side)
        if witness is None:
            verdicts.append(ComponentVerdict(name=name, verdict="undetermined"))
        else:
            verdicts.append(
                ComponentVerdict(name=name, verdict="certified", certificates={other: witness})
            )
    return verdicts


def classify(p: FamilyParams) -> FamilyClassification:
    """
    Contractibility and Nash verdicts for one family member

    Raises ConsistencyError if the closed form and the certificate search
    disagree on anything, witnesses included.
    """
    feasibility = interval_feasibility(p)
    components = _closed_form_components(feasibility)
    contractible = feasibility.kind != "none"
    nash = "certified" if feasibility.kind == "two_sided" else "undetermined"

    data = make_resolution_data(p)
    grauert = criterion.find_grauert_certificate(data)
    solver = criterion.certify_nash_bijective(data)

    mismatches = []
    if (grauert is not None) != contractible:
        mismatches.append("contractible")
    if grauert is not None and grauert.coeffs != feasibility.grauert_witness:
        mismatches.append("grauert_certificate")
    if solver.verdict != nash:
        mismatches.append("nash")
    for closed, solved in zip(components, solver.components):
        if closed.verdict != solved.verdict or dict(closed.certificates) != dict(solved.certificates):
            mismatches.append(closed.name)
    if mismatches:
        raise ConsistencyError(
            f"closed form and certificate search disagree on {', '.join(mismatches)} for {p.key}",
            details={
                "closed_form": [c.model_dump() for c in components],
                "solver": solver.model_dump(),
            },
        )

    lo, hi = interval_bounds(p)
    logger.info(f"family {p.key}: contractible={contractible} nash={nash}")
    return FamilyClassification(
        params=p,
        contractible=contractible,
        grauert_certificate=feasibility.grauert_witness,
        interval=(str(lo), str(hi)),
        feasibility=feasibility,
        components=components,
        nash=nash,
        construction=surface_twists(p),
    )
