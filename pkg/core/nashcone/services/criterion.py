# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""
Ampleness certificates on the exceptional locus

Given the intersection numbers of finitely many curve generators with the
exceptional components, search for effective divisors F of full support whose
negative is ample on every component (Kleiman on each component), and turn
them into contractibility and essentiality verdicts.

Verdicts are one-directional: a missing certificate means "undetermined",
never "not essential".
"""
import logging
import math
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

import sympy

from ..config import get_settings
from ..errors import ConsistencyError, DomainError, StructuralError
from ..feasibility import (
    FourierMotzkin,
    Row,
    equality_rows,
    integral,
    row,
    satisfies,
    satisfies_integral,
)
from ..schemas import ComponentVerdict, ExceptionalDivisor, NashVerdict, ResolutionData

logger = logging.getLogger(__name__)


def degree(data: ResolutionData, coeffs: Sequence[int], curve_index: int) -> int:
    """F.z for F = sum a_k E_k and the given curve generator z."""
    return sum(a * z for a, z in zip(coeffs, data.curves[curve_index].intersections))


def kleiman_check(data: ResolutionData, F: ExceptionalDivisor) -> bool:
    """True iff F.z < 0 for every curve generator, i.e. O(-F) is ample on each component."""
    if len(F.coeffs) != data.size:
        raise StructuralError(
            f"divisor has {len(F.coeffs)} coefficients, resolution has {data.size} components"
        )
    if not F.has_full_support:
        raise DomainError(
            f"divisor {F.coeffs} does not have full support on the exceptional set"
        )
    return all(degree(data, F.coeffs, k) < 0 for k in range(len(data.curves)))


def _unit(n: int, k: int, value: int = 1) -> List[int]:
    return [value if j == k else 0 for j in range(n)]


def certificate_rows(data: ResolutionData, i: Optional[int] = None, j: Optional[int] = None) -> List[Row]:
    """
    Closed-slack form of the strict system

    a_k >= 1 for all k, -F.z >= 1 for all curves, and a_j - a_i >= 1 when a pair
    is given. Integer points of this system are exactly the integer points of
    the strict one.
    """
    n = data.size
    rows = [row(_unit(n, k), 1) for k in range(n)]
    for curve in data.curves:
        rows.append(row([-z for z in curve.intersections], 1))
    if i is not None and j is not None:
        pair = [0] * n
        pair[i] -= 1
        pair[j] += 1
        rows.append(row(pair, 1))
    return rows


def compositions(total: int, parts: int, cap: Optional[int] = None) -> Iterator[List[int]]:
    """Positive integer vectors with the given sum, in lexicographic order."""
    if parts == 1:
        if total >= 1 and (cap is None or total <= cap):
            yield [total]
        return
    top = total - (parts - 1)
    if cap is not None:
        top = min(top, cap)
    for first in range(1, top + 1):
        for rest in compositions(total - first, parts - 1, cap):
            yield [first, *rest]


def _least_total(rows: List[Row], n: int) -> Fraction:
    """Smallest rational coordinate sum over a feasible system."""
    lifted = [Row((*r.coeffs, Fraction(0)), r.rhs) for r in rows]
    lifted += equality_rows([1] * n + [-1], 0)
    window = FourierMotzkin(n + 1).bounds(lifted, n)
    if window is None or window[0] is None:
        raise ConsistencyError("coordinate sum of a feasible system has no lower bound")
    return window[0]


def _lex_first(rows: List[Row], n: int, total: int, prefix: Tuple[int, ...] = ()) -> Optional[List[int]]:
    """Lexicographically first integer point with the given coordinate sum that extends prefix."""
    if len(prefix) == n:
        return list(prefix) if satisfies(prefix, rows) else None
    pinned = [*rows, *equality_rows([1] * n, total)]
    for k, value in enumerate(prefix):
        pinned += equality_rows(_unit(n, k), value)
    window = FourierMotzkin(n).bounds(pinned, len(prefix))
    if window is None:
        return None
    lower, upper = window
    start = 1 if lower is None else max(1, math.ceil(lower))
    stop = total if upper is None else math.floor(upper)
    for value in range(start, stop + 1):
        found = _lex_first(rows, n, total, (*prefix, value))
        if found is not None:
            return found
    return None


def _canonical_point(rows: List[Row], n: int) -> Optional[List[int]]:
    point = FourierMotzkin(n).solve(rows)
    if point is None:
        return None
    # Scaling keeps every ">= 1" row satisfied
    scale = math.lcm(*(x.denominator for x in point))
    scaled = [int(x * scale) for x in point]
    max_sum = get_settings().max_certificate_sum
    ceiling = min(sum(scaled), max_sum)
    for total in range(max(n, math.ceil(_least_total(rows, n))), ceiling + 1):
        candidate = _lex_first(rows, n, total)
        if candidate is not None:
            logger.debug(f"canonical certificate {candidate} at sum {total}")
            return candidate
    if sum(scaled) > max_sum:
        logger.warning(
            f"no certificate with coordinate sum <= {max_sum}; "
            f"returning scaled solver point {scaled}"
        )
        return scaled
    raise ConsistencyError("solver point failed its own system", details=scaled)


def _verified(data: ResolutionData, coeffs: List[int], i: Optional[int] = None, j: Optional[int] = None) -> ExceptionalDivisor:
    F = ExceptionalDivisor(coeffs=tuple(coeffs))
    if not kleiman_check(data, F) or (i is not None and not F.coeffs[i] < F.coeffs[j]):
        raise ConsistencyError(f"certificate {F.coeffs} failed re-verification")
    return F


def find_grauert_certificate(data: ResolutionData) -> Optional[ExceptionalDivisor]:
    """A full-support F with O(-F) ample on the exceptional set, if one exists."""
    coeffs = _canonical_point(certificate_rows(data), data.size)
    if coeffs is None:
        logger.debug("no Grauert certificate: system infeasible")
        return None
    return _verified(data, coeffs)


def _check_pair(data: ResolutionData, i: int, j: int) -> None:
    n = data.size
    if not (0 <= i < n and 0 <= j < n):
        raise StructuralError(f"component index out of range: ({i}, {j}) for {n} components")
    if i == j:
        raise DomainError("F_ij needs two distinct components")


def find_F_ij(data: ResolutionData, i: int, j: int) -> Optional[ExceptionalDivisor]:
    """A full-support F with a_i < a_j and O(-F) ample on every component, if one exists."""
    _check_pair(data, i, j)
    coeffs = _canonical_point(certificate_rows(data, i, j), data.size)
    if coeffs is None:
        logger.debug(f"no F_ij for ({data.components[i]}, {data.components[j]})")
        return None
    return _verified(data, coeffs, i, j)


def certify_essential(data: ResolutionData, i: int) -> ComponentVerdict:
    """E_i is certified essential when every F_ij (j != i) exists."""
    if not 0 <= i < data.size:
        raise StructuralError(f"component index {i} out of range for {data.size} components")
    certificates = {}
    verdict = "certified"
    for j in range(data.size):
        if j == i:
            continue
        F = find_F_ij(data, i, j)
        if F is None:
            verdict = "undetermined"
            continue
        certificates[data.components[j]] = F.coeffs
    logger.info(f"component {data.components[i]}: {verdict}")
    return ComponentVerdict(name=data.components[i], verdict=verdict, certificates=certificates)


def certify_nash_bijective(data: ResolutionData) -> NashVerdict:
    """Certified when every component is certified essential."""
    components = [certify_essential(data, i) for i in range(data.size)]
    verdict = "certified" if all(c.verdict == "certified" for c in components) else "undetermined"
    return NashVerdict(verdict=verdict, components=components)


def _brute_force(data: ResolutionData, rows: List[Row], bound: int) -> Optional[ExceptionalDivisor]:
    n = data.size
    checks = integral(rows)
    for total in range(n, n * bound + 1):
        for candidate in compositions(total, n, cap=bound):
            if satisfies_integral(candidate, checks):
                return ExceptionalDivisor(coeffs=tuple(candidate))
    return None


def brute_force_grauert(data: ResolutionData, bound: Optional[int] = None) -> Optional[ExceptionalDivisor]:
    """Minimal-sum certificate found by enumerating [1..bound]^n."""
    return _brute_force(data, certificate_rows(data), bound or get_settings().brute_bound)


def brute_force_F_ij(data: ResolutionData, i: int, j: int, bound: Optional[int] = None) -> Optional[ExceptionalDivisor]:
    """Minimal-sum F_ij found by enumerating [1..bound]^n."""
    _check_pair(data, i, j)
    return _brute_force(data, certificate_rows(data, i, j), bound or get_settings().brute_bound)


def surface_intersection_matrix(data: ResolutionData) -> Optional[List[List[int]]]:
    """
    The intersection matrix (E_i.E_j) when the curve generators are the components themselves

    Returns None unless curve k is named and labelled after component k and the
    resulting square matrix is symmetric with nonnegative off-diagonal entries.
    """
    if len(data.curves) != data.size:
        return None
    for name, curve in zip(data.components, data.curves):
        if curve.name != name or curve.component not in (None, name):
            return None
    matrix = [list(c.intersections) for c in data.curves]
    if any(matrix[a][b] != matrix[b][a] for a in range(data.size) for b in range(data.size)):
        return None
    if any(matrix[a][b] < 0 for a in range(data.size) for b in range(data.size) if a != b):
        return None
    return matrix


def intersection_matrix_negative_definite(matrix: Sequence[Sequence[int]]) -> bool:
    """Sylvester's criterion: (-1)^k times the k-th leading minor is positive for all k."""
    n = len(matrix)
    if n == 0 or any(len(r) != n for r in matrix):
        raise StructuralError("intersection matrix must be square and nonempty")
    m = sympy.Matrix([list(r) for r in matrix])
    if m != m.T:
        raise StructuralError("intersection matrix must be symmetric")
    for k in range(1, n + 1):
        minor = m[:k, :k].det(method="bareiss")
        if (-1) ** k * minor <= 0:
            return False
    return True


def rational_certificate(data: ResolutionData, i: Optional[int] = None, j: Optional[int] = None) -> Optional[List[Fraction]]:
    """The raw rational point produced by elimination, before canonicalization."""
    return FourierMotzkin(data.size).solve(certificate_rows(data, i, j))
