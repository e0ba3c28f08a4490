# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""
Pydantic schemas for resolution data, certificates and reports
"""
from typing import Dict, List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, StrictInt, field_validator, model_validator

from .cones import Cone

Verdict = Literal["certified", "undetermined"]
Side = Literal["alpha1_lt_alpha2", "alpha2_lt_alpha1"]


class CurveClass(BaseModel):
    """
    A generator z of the closed cone of curves of some component,
    with its intersection numbers (z.E_1, ..., z.E_n)
    """
    model_config = ConfigDict(frozen=True)

    name: str
    component: Optional[str] = None  # Component whose cone of curves it helps generate
    intersections: Tuple[StrictInt, ...]


def uncovered_components(components: Sequence[str], labels: Sequence[Optional[str]]) -> List[str]:
    """
    Components that no curve generator belongs to

    An unlabelled curve is not tied to one component and counts for all of
    them.
    """
    if any(label is None for label in labels):
        return []
    return [name for name in components if name not in labels]


class ResolutionData(BaseModel):
    """Exceptional components E_1..E_n of a divisorial resolution plus curve generators."""
    model_config = ConfigDict(frozen=True)

    components: Tuple[str, ...]
    curves: Tuple[CurveClass, ...]

    @model_validator(mode="after")
    def validate_shape(self) -> "ResolutionData":
        n = len(self.components)
        if n < 1:
            raise ValueError("at least one exceptional component is required")
        if len(set(self.components)) != n:
            raise ValueError("component names must be unique")
        if not self.curves:
            raise ValueError("at least one curve class is required")
        names = [c.name for c in self.curves]
        if len(set(names)) != len(names):
            raise ValueError("curve names must be unique")
        for curve in self.curves:
            if len(curve.intersections) != n:
                raise ValueError(
                    f"curve {curve.name} has {len(curve.intersections)} intersection "
                    f"numbers, expected {n}"
                )
            if curve.component is not None and curve.component not in self.components:
                raise ValueError(f"curve {curve.name} refers to unknown component {curve.component}")
        uncovered = uncovered_components(self.components, [c.component for c in self.curves])
        if uncovered:
            raise ValueError(f"components without a curve generator: {', '.join(uncovered)}")
        return self

    @property
    def size(self) -> int:
        return len(self.components)

    def index_of(self, component: str) -> int:
        return self.components.index(component)


class ExceptionalDivisor(BaseModel):
    """F = sum a_k E_k in the lattice L(pi), with a_k >= 0."""
    model_config = ConfigDict(frozen=True)

    coeffs: Tuple[StrictInt, ...]

    @field_validator("coeffs")
    @classmethod
    def validate_effective(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(a < 0 for a in value):
            raise ValueError("coefficients of an effective divisor are nonnegative")
        return value

    @classmethod
    def of(cls, *coeffs: int) -> "ExceptionalDivisor":
        return cls(coeffs=tuple(coeffs))

    @property
    def has_full_support(self) -> bool:
        return all(a >= 1 for a in self.coeffs)

    def __add__(self, other: "ExceptionalDivisor") -> "ExceptionalDivisor":
        return ExceptionalDivisor(coeffs=tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, k: int) -> "ExceptionalDivisor":
        return ExceptionalDivisor(coeffs=tuple(k * a for a in self.coeffs))


class ComponentVerdict(BaseModel):
    """Essentiality verdict for one component, with the F_ij that certify it."""
    name: str
    verdict: Verdict
    certificates: Dict[str, Tuple[int, ...]] = Field(default_factory=dict)  # keyed by E_j


class NashVerdict(BaseModel):
    verdict: Verdict
    components: List[ComponentVerdict]


class FamilyParams(BaseModel):
    """(g, d1, d2, x1, x2): genus of C, -deg L_i, and the twists x_i."""
    model_config = ConfigDict(frozen=True)

    genus: StrictInt = Field(default=0, ge=0)
    d1: StrictInt = Field(ge=1)
    d2: StrictInt = Field(ge=1)
    x1: StrictInt = Field(ge=1)
    x2: StrictInt = Field(ge=1)

    def swapped(self) -> "FamilyParams":
        return FamilyParams(genus=self.genus, d1=self.d2, d2=self.d1, x1=self.x2, x2=self.x1)

    @property
    def key(self) -> Tuple[int, int, int, int, int]:
        return (self.genus, self.d1, self.d2, self.x1, self.x2)


class IntervalFeasibility(BaseModel):
    """Which sides of 1/x1 < alpha1/alpha2 < x2 carry integer points."""
    kind: Literal["none", "one_sided", "two_sided"]
    sides: List[Side] = Field(default_factory=list)
    witnesses: Dict[Side, Tuple[int, int]] = Field(default_factory=dict)
    grauert_witness: Optional[Tuple[int, int]] = None


class SurfaceTwist(BaseModel):
    """Degrees and self-intersections on the ruled surface S_i."""
    component: str
    degree_on_section: int  # deg_{C_i} H_i
    degree_on_fiber: int  # deg_{F_i} H_i
    dual_is_ample: bool
    section_self_intersection: int  # C_i . C_i
    infinity_self_intersection: int  # C~_i . C~_i


class FamilyClassification(BaseModel):
    params: FamilyParams
    contractible: bool
    grauert_certificate: Optional[Tuple[int, int]] = None
    interval: Tuple[str, str]  # open interval (1/x1, x2) for alpha1/alpha2
    feasibility: IntervalFeasibility
    components: List[ComponentVerdict]
    nash: Verdict
    construction: List[SurfaceTwist] = Field(default_factory=list)


class IntersectionCheck(BaseModel):
    label: str
    expected: int
    computed: int

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


class ToricityReport(BaseModel):
    is_toric: bool
    gamma: Optional[Cone] = None
    smooth_representatives: Tuple[int, int]
    distinguishing_note: str
