# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""
Exact integer lattice arithmetic

Vectors of the weight lattice N, linear forms of the dual lattice M, and the
handful of exact operations the cone and toric code is built on. Nothing here
ever touches a float.
"""
import math
from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy
from pydantic import BaseModel, ConfigDict, StrictInt, field_validator

from .errors import DomainError, StructuralError


class _IntegerTuple(BaseModel):
    """Immutable tuple of arbitrary-precision integers."""

    model_config = ConfigDict(frozen=True)

    coords: Tuple[StrictInt, ...]

    @field_validator("coords")
    @classmethod
    def validate_dimension(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if len(value) < 1:
            raise ValueError("dimension must be at least 1")
        return value

    @classmethod
    def of(cls, *coords: int):
        return cls(coords=tuple(coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check_same_dim(self, other: "_IntegerTuple") -> None:
        if self.dim != other.dim:
            raise StructuralError(
                f"dimension mismatch: {self.dim} vs {other.dim}",
                details={"left": self.coords, "right": other.coords},
            )

    def __add__(self, other):
        self._check_same_dim(other)
        return type(self)(coords=tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check_same_dim(other)
        return type(self)(coords=tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return type(self)(coords=tuple(-a for a in self.coords))

    def scale(self, k: int):
        return type(self)(coords=tuple(k * a for a in self.coords))

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.coords) + ")"


class LatticeVector(_IntegerTuple):
    """A point of N in a fixed basis."""

    def is_primitive(self) -> bool:
        return not self.is_zero() and math.gcd(*self.coords) == 1


class LinearForm(_IntegerTuple):
    """A point of M = Hom(N, Z) in the dual basis."""

    @classmethod
    def dual_basis(cls, dim: int, index: int) -> "LinearForm":
        """The form e_index* of the dual basis (0-based index)."""
        if not 0 <= index < dim:
            raise StructuralError(f"dual basis index {index} out of range for dimension {dim}")
        return cls(coords=tuple(1 if k == index else 0 for k in range(dim)))


def pairing(m: LinearForm, v: LatticeVector) -> int:
    """Exact dual pairing (m, v)."""
    if m.dim != v.dim:
        raise StructuralError(
            f"cannot pair a form of dimension {m.dim} with a vector of dimension {v.dim}"
        )
    return sum(a * b for a, b in zip(m.coords, v.coords))


def _square_matrix(vectors: Sequence[LatticeVector]) -> sympy.Matrix:
    n = len(vectors)
    if n == 0 or any(v.dim != n for v in vectors):
        raise StructuralError(
            f"expected {n} vectors of dimension {n}",
            details=[v.coords for v in vectors],
        )
    # Columns are the vectors
    return sympy.Matrix([list(v.coords) for v in vectors]).T


def det(vectors: Sequence[LatticeVector]) -> int:
    """Exact determinant of n vectors of dimension n."""
    matrix = _square_matrix(vectors)
    return int(matrix.det(method="bareiss"))


def primitive(v: LatticeVector) -> LatticeVector:
    """Generator of the ray through v: v divided by the gcd of its coordinates."""
    if v.is_zero():
        raise DomainError("the zero vector spans no ray")
    g = math.gcd(*v.coords)
    return LatticeVector(coords=tuple(a // g for a in v.coords))


def solve_in_basis(basis: Sequence[LatticeVector], target: LatticeVector) -> List[Fraction]:
    """Rational coefficients c with sum(c_k * basis_k) == target."""
    matrix = _square_matrix(basis)
    if target.dim != len(basis):
        raise StructuralError(
            f"target has dimension {target.dim}, basis has {len(basis)} vectors"
        )
    if matrix.det(method="bareiss") == 0:
        raise DomainError(
            "basis is singular", details=[v.coords for v in basis]
        )
    solution = matrix.LUsolve(sympy.Matrix(list(target.coords)))
    return [Fraction(int(r.p), int(r.q)) for r in (sympy.Rational(x) for x in solution)]


def recombine(coefficients: Sequence[Fraction], basis: Sequence[LatticeVector]) -> List[Fraction]:
    """sum(c_k * basis_k) as a list of rationals."""
    if len(coefficients) != len(basis):
        raise StructuralError(
            f"{len(coefficients)} coefficients for {len(basis)} basis vectors"
        )
    dim = basis[0].dim
    total = [Fraction(0)] * dim
    for c, v in zip(coefficients, basis):
        if v.dim != dim:
            raise StructuralError("basis vectors have different dimensions")
        for k, a in enumerate(v.coords):
            total[k] += Fraction(c) * a
    return total
