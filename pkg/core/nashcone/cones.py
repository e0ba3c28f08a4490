# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""
Rational polyhedral cones and simplicial 3-dimensional fans

Membership, strict convexity and face separation are decided by exact
Fourier-Motzkin feasibility; regularity by exact determinants.
"""
import itertools
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .errors import ConsistencyError, DomainError, StructuralError
from .feasibility import FourierMotzkin, Row, equality_rows, row
from .lattice import LatticeVector, LinearForm, det, pairing, primitive, solve_in_basis

logger = logging.getLogger(__name__)


class Cone(BaseModel):
    """Cone generated by primitive edge vectors, written <l_1, ..., l_n>."""

    model_config = ConfigDict(frozen=True)

    edges: Tuple[LatticeVector, ...]

    @model_validator(mode="after")
    def validate_edges(self) -> "Cone":
        if not self.edges:
            raise ValueError("a cone needs at least one edge")
        dims = {e.dim for e in self.edges}
        if len(dims) != 1:
            raise ValueError(f"edges live in different dimensions: {sorted(dims)}")
        for e in self.edges:
            if not e.is_primitive():
                raise ValueError(f"edge {e} is not primitive")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("edges must span pairwise distinct rays")
        return self

    @classmethod
    def spanned_by(cls, *vectors: LatticeVector) -> "Cone":
        """Cone over arbitrary nonzero generators, each replaced by its primitive vector."""
        return cls(edges=tuple(dict.fromkeys(primitive(v) for v in vectors)))

    @property
    def ambient_dim(self) -> int:
        return self.edges[0].dim

    def __str__(self) -> str:
        return "<" + ", ".join(str(e) for e in self.edges) + ">"


def separating_form(c: Cone) -> Optional[List[Fraction]]:
    """A linear form taking value >= 1 on every edge, or None if none exists."""
    solver = FourierMotzkin(c.ambient_dim)
    return solver.solve([row(e.coords, 1) for e in c.edges])


def is_strictly_convex(c: Cone) -> bool:
    """True iff the cone contains no line."""
    return separating_form(c) is not None


def contains(c: Cone, v: LatticeVector) -> bool:
    """True iff v is a nonnegative rational combination of the edges."""
    if v.dim != c.ambient_dim:
        raise StructuralError(
            f"vector of dimension {v.dim} tested against a cone in dimension {c.ambient_dim}"
        )
    n = len(c.edges)
    rows: List[Row] = []
    for k in range(n):
        rows.append(row([1 if j == k else 0 for j in range(n)], 0))
    for d in range(c.ambient_dim):
        rows.extend(equality_rows([e.coords[d] for e in c.edges], v.coords[d]))
    return FourierMotzkin(n).is_feasible(rows)


def is_regular(c: Cone) -> bool:
    """True iff a simplicial 3-dimensional cone is generated by a lattice basis."""
    if c.ambient_dim != 3 or len(c.edges) != 3:
        raise DomainError(
            f"regularity is decided for simplicial cones in dimension 3, got "
            f"{len(c.edges)} edges in dimension {c.ambient_dim}"
        )
    return abs(det(list(c.edges))) == 1


def plane_normal(u: LatticeVector, w: LatticeVector) -> LinearForm:
    """The form m with m(x) = det(u, w, x), vanishing on the plane spanned by u and w."""
    if u.dim != 3 or w.dim != 3:
        raise DomainError("plane normals are defined in dimension 3")
    basis = [LatticeVector.of(*(1 if k == j else 0 for k in range(3))) for j in range(3)]
    return LinearForm(coords=tuple(det([u, w, e]) for e in basis))


class Fan(BaseModel):
    """
    Simplicial fan given by named rays and maximal cones

    Maximal cones are tuples of ray names. Every ray has to be used by at least
    one maximal cone.
    """

    model_config = ConfigDict(frozen=True)

    rays: Dict[str, LatticeVector]
    max_cones: Tuple[Tuple[str, ...], ...]

    @model_validator(mode="after")
    def validate_fan(self) -> "Fan":
        if not self.rays:
            raise ValueError("a fan needs at least one ray")
        dims = {v.dim for v in self.rays.values()}
        if len(dims) != 1:
            raise ValueError(f"rays live in different dimensions: {sorted(dims)}")
        for name, v in self.rays.items():
            if not v.is_primitive():
                raise ValueError(f"ray {name}={v} is not primitive")
        if len(set(self.rays.values())) != len(self.rays):
            raise ValueError("rays must be pairwise non-proportional")
        used = set()
        for cone in self.max_cones:
            unknown = [n for n in cone if n not in self.rays]
            if unknown:
                raise ValueError(f"cone {cone} uses unknown rays {unknown}")
            if len(set(cone)) != len(cone):
                raise ValueError(f"cone {cone} repeats a ray")
            used.update(cone)
        unused = [n for n in self.rays if n not in used]
        if unused:
            raise ValueError(f"rays {unused} occur in no maximal cone")
        return self

    @property
    def ambient_dim(self) -> int:
        return next(iter(self.rays.values())).dim

    def cone(self, names: Sequence[str]) -> Cone:
        missing = [n for n in names if n not in self.rays]
        if missing:
            raise StructuralError(f"unknown rays {missing}")
        return Cone(edges=tuple(self.rays[n] for n in names))

    def name_of(self, v: LatticeVector) -> Optional[str]:
        for name, ray in self.rays.items():
            if ray == v:
                return name
        return None

    def cones_containing(self, names: Sequence[str]) -> List[Tuple[str, ...]]:
        return [c for c in self.max_cones if all(n in c for n in names)]

    def walls(self) -> Dict[Tuple[str, str], List[Tuple[str, ...]]]:
        """Each 2-dimensional face (as a sorted name pair) with the maximal cones around it."""
        result: Dict[Tuple[str, str], List[Tuple[str, ...]]] = {}
        for cone in self.max_cones:
            for pair in itertools.combinations(cone, 2):
                result.setdefault(tuple(sorted(pair)), []).append(cone)
        return result


def _meet_in_common_face(fan: Fan, first: Tuple[str, ...], second: Tuple[str, ...]) -> bool:
    """Simplicial cones meet in a common face iff a hyperplane separates them through it."""
    shared = [n for n in first if n in second]
    rows: List[Row] = []
    for n in shared:
        rows.extend(equality_rows(fan.rays[n].coords, 0))
    for n in first:
        if n not in shared:
            rows.append(row(fan.rays[n].coords, 1))
    for n in second:
        if n not in shared:
            rows.append(row([-a for a in fan.rays[n].coords], 1))
    return FourierMotzkin(fan.ambient_dim).is_feasible(rows)


def is_face_compatible(fan: Fan) -> bool:
    """Every pairwise intersection of maximal cones is a common face."""
    for first, second in itertools.combinations(fan.max_cones, 2):
        if set(first) == set(second) or not _meet_in_common_face(fan, first, second):
            logger.debug(f"cones {first} and {second} overlap outside a common face")
            return False
    return True


def _is_supporting(normal: LinearForm, target: Cone) -> bool:
    values = [pairing(normal, e) for e in target.edges]
    return any(values) and (all(v >= 0 for v in values) or all(v <= 0 for v in values))


def fan_is_subdivision_of(f: Fan, target: Cone) -> bool:
    """
    True iff the maximal cones of a simplicial 3-dimensional fan cover exactly target

    Checks, in order: face compatibility, every ray inside target, every edge of
    target among the rays, full-dimensional maximal cones, and a closed
    pseudo-manifold structure whose boundary walls lie in supporting planes of
    target.
    """
    if f.ambient_dim != 3 or target.ambient_dim != 3:
        raise DomainError("subdivision checks are implemented in dimension 3")
    if any(len(c) != 3 for c in f.max_cones):
        raise DomainError("subdivision checks need simplicial maximal cones")

    if not is_face_compatible(f):
        return False
    for name, v in f.rays.items():
        if not contains(target, v):
            logger.debug(f"ray {name}={v} lies outside {target}")
            return False
    rays = set(f.rays.values())
    for e in target.edges:
        if e not in rays:
            logger.debug(f"edge {e} of the target is not a ray of the fan")
            return False
    for cone in f.max_cones:
        if det([f.rays[n] for n in cone]) == 0:
            logger.debug(f"cone {cone} is not full-dimensional")
            return False
    for pair, around in f.walls().items():
        if len(around) > 2:
            logger.debug(f"wall {pair} is shared by {len(around)} cones")
            return False
        if len(around) == 1:
            normal = plane_normal(f.rays[pair[0]], f.rays[pair[1]])
            if not _is_supporting(normal, target):
                logger.debug(f"boundary wall {pair} is not on the boundary of the target")
                return False
    return True


def wall_relation(f: Fan, wall: Cone) -> Dict[str, int]:
    """
    Intersection numbers of the curve V_wall with every toric divisor

    For the interior wall <u1, u2> between <u1, u2, u3> and <u1, u2, u4> the
    relation v3 + v4 + a*v1 + b*v2 = 0 gives V_wall.V_u1 = a, V_wall.V_u2 = b,
    V_wall.V_u3 = V_wall.V_u4 = 1 and zero for every other ray.
    """
    if len(wall.edges) != 2:
        raise DomainError(f"a wall has two edges, got {len(wall.edges)}")
    names = [f.name_of(e) for e in wall.edges]
    if None in names:
        raise StructuralError(f"wall {wall} is not spanned by rays of the fan")
    u1, u2 = names
    around = f.cones_containing([u1, u2])
    if len(around) != 2:
        raise DomainError(
            f"wall <{u1}, {u2}> is not interior: it lies in {len(around)} maximal cone(s)"
        )
    (u3,) = [n for n in around[0] if n not in (u1, u2)]
    (u4,) = [n for n in around[1] if n not in (u1, u2)]
    v1, v2, v3, v4 = (f.rays[n] for n in (u1, u2, u3, u4))

    a, b, c = solve_in_basis([v1, v2, v3], -(v3 + v4))
    if c != 0 or a.denominator != 1 or b.denominator != 1:
        raise ConsistencyError(
            f"wall <{u1}, {u2}> has no integral relation; the fan is not regular there",
            details={"coefficients": [str(a), str(b), str(c)]},
        )
    numbers = {name: 0 for name in f.rays}
    numbers[u1] = int(a)
    numbers[u2] = int(b)
    numbers[u3] = 1
    numbers[u4] = 1
    return numbers
