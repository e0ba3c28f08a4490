# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""
Exact rational feasibility by Fourier-Motzkin elimination

Systems are lists of rows ``coeffs . x >= rhs`` over the rationals. The number
of variables is always small here (one per exceptional component or per cone
edge), so plain elimination with duplicate pruning is fast enough and keeps
every intermediate value exact.
"""
import logging
from fractions import Fraction
from math import gcd
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .errors import StructuralError

logger = logging.getLogger(__name__)


class Row(NamedTuple):
    """One inequality ``coeffs . x >= rhs``."""

    coeffs: Tuple[Fraction, ...]
    rhs: Fraction


def row(coeffs: Sequence[int | Fraction], rhs: int | Fraction) -> Row:
    return Row(tuple(Fraction(c) for c in coeffs), Fraction(rhs))


def equality_rows(coeffs: Sequence[int | Fraction], rhs: int | Fraction) -> List[Row]:
    """``coeffs . x == rhs`` as a pair of opposite inequalities."""
    return [row(coeffs, rhs), row([-c for c in coeffs], -Fraction(rhs))]


def _normalize(r: Row) -> Row:
    lead = next((c for c in r.coeffs if c != 0), None)
    if lead is None:
        return r
    scale = abs(lead)
    return Row(tuple(c / scale for c in r.coeffs), r.rhs / scale)


def _prune(rows: Sequence[Row]) -> Optional[List[Row]]:
    """Keep the tightest row per direction; None if a constant row is violated."""
    tightest: Dict[Tuple[Fraction, ...], Fraction] = {}
    for r in rows:
        r = _normalize(r)
        if not any(r.coeffs):
            if r.rhs > 0:
                return None
            continue
        current = tightest.get(r.coeffs)
        if current is None or r.rhs > current:
            tightest[r.coeffs] = r.rhs
    return [Row(coeffs, rhs) for coeffs, rhs in tightest.items()]


class FourierMotzkin:
    """
    Fourier-Motzkin elimination with back-substitution

    Variables are eliminated in index order; the intermediate systems are kept
    so that a feasible point can be rebuilt from the last variable backwards.
    """

    def __init__(self, num_vars: int):
        if num_vars < 1:
            raise StructuralError("a system needs at least one variable")
        self.num_vars = num_vars

    def _check(self, rows: Sequence[Row]) -> None:
        for r in rows:
            if len(r.coeffs) != self.num_vars:
                raise StructuralError(
                    f"row has {len(r.coeffs)} coefficients, expected {self.num_vars}"
                )

    def _eliminate(self, rows: List[Row], var: int) -> Optional[List[Row]]:
        positive = [r for r in rows if r.coeffs[var] > 0]
        negative = [r for r in rows if r.coeffs[var] < 0]
        result = [r for r in rows if r.coeffs[var] == 0]
        for p in positive:
            for n in negative:
                a, b = p.coeffs[var], -n.coeffs[var]
                result.append(
                    Row(
                        tuple(b * pc + a * nc for pc, nc in zip(p.coeffs, n.coeffs)),
                        b * p.rhs + a * n.rhs,
                    )
                )
        logger.debug(
            f"eliminate x{var}: zero={len(rows) - len(positive) - len(negative)} "
            f"pos={len(positive)} neg={len(negative)} -> {len(result)} rows"
        )
        return _prune(result)

    def solve(self, rows: Sequence[Row]) -> Optional[List[Fraction]]:
        """Return a rational point satisfying every row, or None if infeasible."""
        self._check(rows)
        current = _prune(rows)
        if current is None:
            return None
        stages = [current]
        for var in range(self.num_vars):
            current = self._eliminate(current, var)
            if current is None:
                logger.debug(f"infeasible after eliminating x{var}")
                return None
            stages.append(current)

        point: List[Fraction] = [Fraction(0)] * self.num_vars
        for var in reversed(range(self.num_vars)):
            lower: Optional[Fraction] = None
            upper: Optional[Fraction] = None
            for r in stages[var]:
                c = r.coeffs[var]
                if c == 0:
                    continue
                rest = r.rhs - sum(
                    (r.coeffs[k] * point[k] for k in range(var + 1, self.num_vars)),
                    Fraction(0),
                )
                bound = rest / c
                if c > 0:
                    lower = bound if lower is None else max(lower, bound)
                else:
                    upper = bound if upper is None else min(upper, bound)
            if lower is not None:
                point[var] = lower
            elif upper is not None:
                point[var] = upper
        return point

    def is_feasible(self, rows: Sequence[Row]) -> bool:
        return self.solve(rows) is not None

    def bounds(self, rows: Sequence[Row], var: int) -> Optional[Tuple[Optional[Fraction], Optional[Fraction]]]:
        """
        Exact range (lower, upper) of x_var over the polyhedron

        Every other variable is projected out. None means the system is
        infeasible; a None end means x_var is unbounded on that side.
        """
        self._check(rows)
        if not 0 <= var < self.num_vars:
            raise StructuralError(f"variable index {var} out of range for {self.num_vars} variables")
        current = _prune(rows)
        if current is None:
            return None
        for other in range(self.num_vars):
            if other == var:
                continue
            current = self._eliminate(current, other)
            if current is None:
                return None
        lower: Optional[Fraction] = None
        upper: Optional[Fraction] = None
        for r in current:
            c = r.coeffs[var]
            bound = r.rhs / c
            if c > 0:
                lower = bound if lower is None else max(lower, bound)
            else:
                upper = bound if upper is None else min(upper, bound)
        if lower is not None and upper is not None and lower > upper:
            return None
        return lower, upper


def satisfies(point: Sequence[int | Fraction], rows: Sequence[Row]) -> bool:
    """Exact check of a point against every row."""
    return all(
        sum((c * x for c, x in zip(r.coeffs, point)), Fraction(0)) >= r.rhs for r in rows
    )


def integral(rows: Sequence[Row]) -> List[Tuple[Tuple[int, ...], int]]:
    """Rows scaled to integer coefficients, for fast repeated membership tests."""
    result = []
    for r in rows:
        scale = 1
        for value in (*r.coeffs, r.rhs):
            scale = scale * value.denominator // gcd(scale, value.denominator)
        result.append((tuple(int(c * scale) for c in r.coeffs), int(r.rhs * scale)))
    return result


def satisfies_integral(point: Sequence[int], rows: Sequence[Tuple[Tuple[int, ...], int]]) -> bool:
    return all(sum(c * x for c, x in zip(coeffs, point)) >= rhs for coeffs, rhs in rows)
