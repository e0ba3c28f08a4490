# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""
Tests for exact lattice arithmetic
"""
import itertools
import random
from fractions import Fraction

import pytest
from pydantic import ValidationError

from nashcone.errors import DomainError, StructuralError
from nashcone.lattice import (
    LatticeVector,
    LinearForm,
    det,
    pairing,
    primitive,
    recombine,
    solve_in_basis,
)

V = LatticeVector.of
M = LinearForm.of


def random_vector(rng: random.Random, dim: int = 3, spread: int = 9) -> LatticeVector:
    return LatticeVector(coords=tuple(rng.randint(-spread, spread) for _ in range(dim)))


class TestVectors:
    """Tests for LatticeVector and LinearForm"""

    def test_arithmetic(self):
        assert V(1, 2, 3) + V(0, -2, 1) == V(1, 0, 4)
        assert V(1, 2, 3) - V(1, 2, 3) == V(0, 0, 0)
        assert -V(1, -2, 0) == V(-1, 2, 0)
        assert V(1, 2, 3).scale(-2) == V(-2, -4, -6)

    def test_dimension_mismatch(self):
        with pytest.raises(StructuralError):
            V(1, 2) + V(1, 2, 3)

    def test_empty_vector_rejected(self):
        with pytest.raises(ValidationError):
            V()

    def test_floats_rejected(self):
        with pytest.raises(ValidationError):
            LatticeVector(coords=(1.0, 2, 3))

    def test_big_integers_stay_exact(self):
        big = 10**40 + 1
        assert (V(big, 0) + V(big, 1)).coords == (2 * big, 1)

    def test_is_primitive(self):
        assert V(2, 3, 0).is_primitive()
        assert not V(2, 4, 0).is_primitive()
        assert not V(0, 0, 0).is_primitive()

    def test_dual_basis(self):
        assert LinearForm.dual_basis(3, 1) == M(0, 1, 0)
        with pytest.raises(StructuralError):
            LinearForm.dual_basis(3, 3)

    def test_str(self):
        assert str(V(-1, 2, 0)) == "(-1, 2, 0)"


class TestPairing:
    """Tests for the dual pairing"""

    def test_pairing(self):
        assert pairing(M(1, 2, 0), V(3, 4, 5)) == 11

    def test_pairing_with_basis_forms(self):
        v = V(-2, 3, 0)
        assert [pairing(LinearForm.dual_basis(3, k), v) for k in range(3)] == [-2, 3, 0]

    def test_dimension_mismatch(self):
        with pytest.raises(StructuralError):
            pairing(M(1, 0), V(1, 0, 0))

    @pytest.mark.parametrize("seed", range(5))
    def test_bilinear(self, seed):
        rng = random.Random(seed)
        for _ in range(50):
            m, n = M(*random_vector(rng).coords), M(*random_vector(rng).coords)
            v, w = random_vector(rng), random_vector(rng)
            k = rng.randint(-5, 5)
            assert pairing(m, v + w) == pairing(m, v) + pairing(m, w)
            assert pairing(m + n, v) == pairing(m, v) + pairing(n, v)
            assert pairing(m, v.scale(k)) == k * pairing(m, v)
            assert pairing(m.scale(k), v) == k * pairing(m, v)


class TestDet:
    """Tests for exact determinants"""

    def test_identity(self):
        assert det([V(1, 0, 0), V(0, 1, 0), V(0, 0, 1)]) == 1

    def test_orientation(self):
        assert det([V(0, 1, 0), V(1, 0, 0), V(0, 0, 1)]) == -1

    def test_coplanar_is_zero(self):
        assert det([V(1, 0, 0), V(0, 1, 0), V(-1, 2, 0)]) == 0

    def test_regular_family_cone(self):
        # <c, d, e> for x1 = 3, x2 = 4
        assert det([V(-1, 3, 0), V(-4, 11, 0), V(0, 0, 1)]) == 1

    def test_not_square(self):
        with pytest.raises(StructuralError):
            det([V(1, 0, 0), V(0, 1, 0)])

    @pytest.mark.parametrize("swap", list(itertools.combinations(range(3), 2)))
    def test_transposition_flips_sign(self, swap):
        rng = random.Random(sum(swap))
        for _ in range(30):
            vectors = [random_vector(rng) for _ in range(3)]
            swapped = list(vectors)
            a, b = swap
            swapped[a], swapped[b] = swapped[b], swapped[a]
            assert det(swapped) == -det(vectors)


class TestPrimitive:
    """Tests for primitive ray generators"""

    @pytest.mark.parametrize(
        "v, expected",
        [
            ((2, 4, 6), (1, 2, 3)),
            ((-2, 0, 0), (-1, 0, 0)),
            ((0, 5, -10), (0, 1, -2)),
            ((3, 5), (3, 5)),
        ],
    )
    def test_primitive(self, v, expected):
        assert primitive(V(*v)) == V(*expected)

    def test_zero_vector(self):
        with pytest.raises(DomainError):
            primitive(V(0, 0, 0))

    def test_invariant_under_positive_scaling(self):
        rng = random.Random(3)
        for _ in range(100):
            v = random_vector(rng)
            if v.is_zero():
                continue
            k = rng.randint(1, 12)
            assert primitive(v.scale(k)) == primitive(v)
            assert primitive(v).is_primitive()


class TestSolveInBasis:
    """Tests for exact rational solves"""

    def test_solution_recombines(self):
        basis = [V(2, 0, 0), V(0, 3, 0), V(1, 1, 1)]
        target = V(1, 1, 1)
        coeffs = solve_in_basis(basis, target)
        assert recombine(coeffs, basis) == [Fraction(1), Fraction(1), Fraction(1)]
        assert coeffs == [Fraction(0), Fraction(0), Fraction(1)]

    def test_fractional_solution(self):
        coeffs = solve_in_basis([V(2, 0), V(0, 3)], V(1, 1))
        assert coeffs == [Fraction(1, 2), Fraction(1, 3)]

    def test_singular_basis(self):
        with pytest.raises(DomainError):
            solve_in_basis([V(1, 0, 0), V(2, 0, 0), V(0, 0, 1)], V(1, 1, 1))

    def test_target_dimension(self):
        with pytest.raises(StructuralError):
            solve_in_basis([V(1, 0), V(0, 1)], V(1, 1, 1))
