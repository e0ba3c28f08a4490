# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""
Toric model of the two-component family

For genus 0 the germ is the affine toric variety of the cone
gamma = <a, e, d, f>, resolved by the regular fan with rays

    v_a = (1, 0, 0)          v_b = (0, 1, 0)          v_e = (0, 0, 1)
    v_c = -v_a + x1 v_b      v_d = -x2 v_a + (x1 x2 - 1) v_b
    v_f = -d1 v_a + (d2 + d1 x1) v_b - v_e

The divisors V_b and V_c are the two ruled surfaces; the wall relations of
the fan recover the abstract intersection rows of the family.
"""
import logging
from typing import Dict, List, Literal, Tuple

from pydantic import BaseModel, ConfigDict

from ..cones import (
    Cone,
    Fan,
    fan_is_subdivision_of,
    is_regular,
    is_strictly_convex,
    wall_relation,
)
from ..errors import ConsistencyError, DomainError
from ..lattice import LatticeVector, LinearForm, pairing
from ..schemas import FamilyParams, IntersectionCheck, ToricityReport

logger = logging.getLogger(__name__)

MAX_CONES = (
    ("a", "b", "e"),
    ("b", "c", "e"),
    ("c", "d", "e"),
    ("a", "b", "f"),
    ("b", "c", "f"),
    ("c", "d", "f"),
)
GAMMA_RAYS = ("a", "e", "d", "f")


class ToricModel(BaseModel):
    """The fan, the cone it subdivides and the form certifying its convexity."""
    model_config = ConfigDict(frozen=True)

    fan: Fan
    gamma: Cone
    convexity_form: LinearForm


def _rays(p: FamilyParams) -> Dict[str, LatticeVector]:
    return {
        "a": LatticeVector.of(1, 0, 0),
        "b": LatticeVector.of(0, 1, 0),
        "c": LatticeVector.of(-1, p.x1, 0),
        "d": LatticeVector.of(-p.x2, p.x1 * p.x2 - 1, 0),
        "e": LatticeVector.of(0, 0, 1),
        "f": LatticeVector.of(-p.d1, p.d2 + p.d1 * p.x1, -1),
    }


def _require_convex(p: FamilyParams) -> None:
    if p.x1 * p.x2 <= 1:
        raise DomainError(
            f"gamma is not strictly convex for x1*x2 = {p.x1 * p.x2}; need x1*x2 > 1",
            details={"x1": p.x1, "x2": p.x2},
        )


def build_fan(p: FamilyParams) -> ToricModel:
    """
    Build the regular fan subdividing gamma for one family member

    Raises DomainError if x1*x2 <= 1, ConsistencyError if the resulting fan
    fails its own regularity or subdivision checks.
    """
    _require_convex(p)
    fan = Fan(rays=_rays(p), max_cones=MAX_CONES)
    gamma = fan.cone(GAMMA_RAYS)
    m = LinearForm.of(p.x1 * p.x2 - 1, p.x2, 0)

    singular = [c for c in fan.max_cones if not is_regular(fan.cone(c))]
    if singular:
        raise ConsistencyError(f"maximal cones {singular} are not regular", details=p.key)
    if not is_strictly_convex(gamma):
        raise ConsistencyError(f"gamma {gamma} is not strictly convex", details=p.key)
    if not fan_is_subdivision_of(fan, gamma):
        raise ConsistencyError(f"fan does not subdivide gamma {gamma}", details=p.key)

    logger.debug(f"built fan for {p.key}: gamma = {gamma}")
    return ToricModel(fan=fan, gamma=gamma, convexity_form=m)


def character_divisor(model: ToricModel, m: LinearForm) -> Dict[str, int]:
    """div(chi^m) = sum over rays l of (m, v_l) V_l."""
    return {name: pairing(m, v) for name, v in model.fan.rays.items()}


def intersection_table(model: ToricModel, p: FamilyParams) -> List[IntersectionCheck]:
    """Wall-relation intersection numbers next to the values the family predicts."""
    fan = model.fan
    bc = wall_relation(fan, fan.cone(("b", "c")))
    be = wall_relation(fan, fan.cone(("b", "e")))
    ce = wall_relation(fan, fan.cone(("c", "e")))
    return [
        IntersectionCheck(label="V<b,c>.V_b", expected=-p.d2, computed=bc["b"]),
        IntersectionCheck(label="V<b,c>.V_c", expected=-p.d1, computed=bc["c"]),
        IntersectionCheck(label="V<b,e>.V_b", expected=-p.x1, computed=be["b"]),
        IntersectionCheck(label="V<c,e>.V_c", expected=-p.x2, computed=ce["c"]),
        IntersectionCheck(label="V<b,e>.V_c", expected=1, computed=be["c"]),
        IntersectionCheck(label="V<c,e>.V_b", expected=1, computed=ce["b"]),
    ]


def verify_intor(model: ToricModel, p: FamilyParams) -> Tuple[bool, List[IntersectionCheck]]:
    """
    Compare the toric intersection numbers with the family's rows

    A wall without an integral relation counts as a failure and yields an
    empty table.
    """
    try:
        table = intersection_table(model, p)
    except (ConsistencyError, DomainError) as e:
        logger.warning(f"intersection check for {p.key} failed: {e.message}")
        return False, []
    bad = [c.label for c in table if not c.ok]
    if bad:
        logger.warning(f"intersection mismatch for {p.key}: {bad}")
    return not bad, table


def convexity_certificate(model: ToricModel, p: FamilyParams) -> Tuple[int, int]:
    """(m, v_a) and (m, v_f) for the form m vanishing on the face <d, e>; both positive."""
    rays = model.fan.rays
    m = model.convexity_form
    on_a, on_f = pairing(m, rays["a"]), pairing(m, rays["f"])
    on_d, on_e = pairing(m, rays["d"]), pairing(m, rays["e"])
    expected = (p.x1 * p.x2 - 1, p.d1 + p.x2 * p.d2)
    if (on_a, on_f) != expected or on_a < 1 or on_f < 1 or on_d != 0 or on_e != 0:
        raise ConsistencyError(
            f"convexity form {m} does not certify gamma",
            details={"a": on_a, "f": on_f, "d": on_d, "e": on_e, "expected": expected},
        )
    return on_a, on_f


def toricity_report(p: FamilyParams) -> ToricityReport:
    """Toric exactly when C is rational; the pair of smooth representatives is {g, g}."""
    _require_convex(p)
    toric = p.genus == 0
    gamma = build_fan(p).gamma if toric else None
    if toric:
        note = (
            "C is rational: the germ is analytically the affine toric variety of gamma. "
            "Germs whose curves C have different genus are not analytically isomorphic."
        )
    else:
        note = (
            f"C has genus {p.genus}: the germ is not analytically isomorphic to a toric germ. "
            "Germs whose curves C have different genus are not analytically isomorphic."
        )
    return ToricityReport(
        is_toric=toric,
        gamma=gamma,
        smooth_representatives=(p.genus, p.genus),
        distinguishing_note=note,
    )


def compare_germs(p: FamilyParams, q: FamilyParams) -> Literal["distinct", "undetermined"]:
    """
    Tell two germs apart by their smooth representatives

    Only the genus labels can separate them; equal labels never prove an
    isomorphism.
    """
    if sorted(toricity_report(p).smooth_representatives) != sorted(
        toricity_report(q).smooth_representatives
    ):
        return "distinct"
    return "undetermined"
