# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""
Tests for Fourier-Motzkin feasibility
"""
from fractions import Fraction

import pytest

from nashcone.errors import StructuralError
from nashcone.feasibility import (
    FourierMotzkin,
    equality_rows,
    integral,
    row,
    satisfies,
    satisfies_integral,
)


class TestFourierMotzkin:
    """Tests for the elimination solver"""

    def test_feasible_point_satisfies_rows(self):
        rows = [row([1, 0], 1), row([0, 1], 1), row([2, -1], 1), row([-1, 2], 1)]
        point = FourierMotzkin(2).solve(rows)
        assert point is not None
        assert satisfies(point, rows)

    def test_infeasible(self):
        # x >= 1 and -x >= 0
        assert FourierMotzkin(1).solve([row([1], 1), row([-1], 0)]) is None

    def test_infeasible_after_elimination(self):
        # x - y >= 1, y - x >= 1
        assert not FourierMotzkin(2).is_feasible([row([1, -1], 1), row([-1, 1], 1)])

    def test_equalities(self):
        rows = equality_rows([1, 1], 3) + [row([1, 0], 0), row([0, 1], 0), row([1, -1], 1)]
        point = FourierMotzkin(2).solve(rows)
        assert point is not None
        assert point[0] + point[1] == 3
        assert satisfies(point, rows)

    def test_fractional_vertex(self):
        # 3x >= 1, -3x >= -1 pins x = 1/3
        point = FourierMotzkin(1).solve([row([3], 1), row([-3], -1)])
        assert point == [Fraction(1, 3)]

    def test_unconstrained_variable(self):
        point = FourierMotzkin(2).solve([row([1, 0], 2)])
        assert point is not None and point[0] >= 2

    def test_constant_rows(self):
        assert FourierMotzkin(2).is_feasible([row([0, 0], 0)])
        assert not FourierMotzkin(2).is_feasible([row([0, 0], 1)])

    def test_row_length_checked(self):
        with pytest.raises(StructuralError):
            FourierMotzkin(2).solve([row([1, 0, 0], 1)])

    def test_needs_a_variable(self):
        with pytest.raises(StructuralError):
            FourierMotzkin(0)


class TestBounds:
    """Tests for projecting onto one variable"""

    def test_triangle(self):
        # x >= 1, y >= 1, x + y <= 5
        rows = [row([1, 0], 1), row([0, 1], 1), row([-1, -1], -5)]
        assert FourierMotzkin(2).bounds(rows, 0) == (Fraction(1), Fraction(4))
        assert FourierMotzkin(2).bounds(rows, 1) == (Fraction(1), Fraction(4))

    def test_fractional_ends(self):
        # 2x >= 1, 3x <= 2
        rows = [row([2], 1), row([-3], -2)]
        assert FourierMotzkin(1).bounds(rows, 0) == (Fraction(1, 2), Fraction(2, 3))

    def test_unbounded_side(self):
        # y >= 2x + 1, x >= 1
        rows = [row([-2, 1], 1), row([1, 0], 1)]
        assert FourierMotzkin(2).bounds(rows, 1) == (Fraction(3), None)

    def test_infeasible(self):
        assert FourierMotzkin(2).bounds([row([1, -1], 1), row([-1, 1], 1)], 0) is None

    def test_variable_out_of_range(self):
        with pytest.raises(StructuralError):
            FourierMotzkin(2).bounds([row([1, 0], 1)], 2)


class TestIntegralRows:
    """Tests for integer-scaled membership checks"""

    def test_scaling_clears_denominators(self):
        rows = [row([Fraction(1, 2), Fraction(-1, 3)], Fraction(1, 6))]
        assert integral(rows) == [((3, -2), 1)]

    def test_membership_agrees(self):
        rows = [row([1, 0], 1), row([Fraction(1, 2), -1], Fraction(-3, 2))]
        checks = integral(rows)
        for point in ([1, 1], [1, 2], [3, 1], [1, 5]):
            assert satisfies(point, rows) == satisfies_integral(point, checks)
