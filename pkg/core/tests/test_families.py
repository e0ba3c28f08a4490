# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""
Tests for the two-component families
"""
from fractions import Fraction

import pytest
from pydantic import ValidationError

from nashcone.errors import ConsistencyError
from nashcone.schemas import FamilyParams
from nashcone.services import families
from nashcone.services.families import (
    classify,
    interval_feasibility,
    make_resolution_data,
    self_intersections,
    simplest_between,
    twist_degrees,
)

from .conftest import box, family


class TestFamilyParams:
    """Tests for parameter validation"""

    @pytest.mark.parametrize("field", ["d1", "d2", "x1", "x2"])
    def test_positive(self, field):
        values = {"d1": 1, "d2": 1, "x1": 1, "x2": 1, field: 0}
        with pytest.raises(ValidationError):
            FamilyParams(**values)

    def test_genus_nonnegative(self):
        with pytest.raises(ValidationError):
            FamilyParams(genus=-1, d1=1, d2=1, x1=1, x2=1)

    def test_swapped(self):
        assert family(1, 2, 3, 4).swapped() == family(2, 1, 4, 3)


class TestResolutionData:
    """Tests for make_resolution_data"""

    def test_rows(self):
        data = make_resolution_data(family(1, 1, 2, 2))
        assert data.components == ("S1", "S2")
        assert [c.intersections for c in data.curves] == [(-1, -1), (-2, 1), (1, -2)]
        assert [c.component for c in data.curves] == [None, "S1", "S2"]

    def test_rows_general(self):
        data = make_resolution_data(family(3, 5, 2, 4))
        assert [c.intersections for c in data.curves] == [(-5, -3), (-2, 1), (1, -4)]


class TestSimplestBetween:
    """Tests for the Stern-Brocot closed form"""

    @pytest.mark.parametrize(
        "lo, hi, expected",
        [
            (Fraction(1, 2), Fraction(1), Fraction(2, 3)),
            (Fraction(1), Fraction(2), Fraction(3, 2)),
            (Fraction(1, 3), Fraction(3), Fraction(1)),
            (Fraction(1), None, Fraction(2)),
            (Fraction(2, 5), Fraction(1, 2), Fraction(3, 7)),
            (Fraction(0), Fraction(1, 4), Fraction(1, 5)),
        ],
    )
    def test_examples(self, lo, hi, expected):
        assert simplest_between(lo, hi) == expected

    def test_is_minimal(self):
        lo, hi = Fraction(3, 7), Fraction(5, 9)
        best = simplest_between(lo, hi)
        for q in range(1, best.denominator + 1):
            for p in range(0, 2 * q):
                if lo < Fraction(p, q) < hi:
                    assert p + q >= best.numerator + best.denominator

    def test_empty_interval(self):
        with pytest.raises(ValueError):
            simplest_between(Fraction(1), Fraction(1))


class TestIntervalFeasibility:
    """Tests for interval_feasibility"""

    def test_two_sided(self):
        result = interval_feasibility(family(1, 1, 2, 2))
        assert result.kind == "two_sided"
        assert result.witnesses == {"alpha1_lt_alpha2": (2, 3), "alpha2_lt_alpha1": (3, 2)}
        assert result.grauert_witness == (1, 1)

    def test_one_sided(self):
        result = interval_feasibility(family(1, 1, 1, 3))
        assert result.kind == "one_sided"
        assert result.sides == ["alpha2_lt_alpha1"]
        assert result.witnesses == {"alpha2_lt_alpha1": (2, 1)}
        assert result.grauert_witness == (2, 1)

    def test_none(self):
        result = interval_feasibility(family(1, 1, 1, 1))
        assert result.kind == "none"
        assert result.witnesses == {}
        assert result.grauert_witness is None


class TestSurfaces:
    """Tests for twist degrees and self-intersections"""

    def test_twist_degrees(self):
        p = family(2, 3, 4, 5)
        assert twist_degrees(p, 1) == (-3, -4)
        assert twist_degrees(p, 2) == (-2, -5)

    def test_self_intersections(self):
        p = family(2, 3, 4, 5)
        assert self_intersections(p, 1) == (-2, 2)
        assert self_intersections(p, 2) == (-3, 3)

    def test_bad_index(self):
        with pytest.raises(ValueError):
            twist_degrees(family(1, 1, 1, 1), 3)


class TestClassify:
    """Tests for classify"""

    def test_certified(self):
        result = classify(family(1, 1, 2, 2))
        assert result.contractible
        assert result.nash == "certified"
        assert result.grauert_certificate == (1, 1)
        assert [c.verdict for c in result.components] == ["certified", "certified"]
        assert result.components[0].certificates == {"S2": (2, 3)}
        assert result.interval == ("1/2", "2")
        assert all(t.dual_is_ample for t in result.construction)

    def test_one_sided(self):
        result = classify(family(1, 1, 1, 3, genus=2))
        assert result.contractible
        assert result.nash == "undetermined"
        assert [c.verdict for c in result.components] == ["undetermined", "certified"]

    def test_not_contractible(self):
        result = classify(family(1, 1, 1, 1))
        assert not result.contractible
        assert result.grauert_certificate is None
        assert result.nash == "undetermined"

    def test_symmetric_under_swap(self):
        for d1, d2, x1, x2 in box(1, 3):
            p = family(d1, d2, x1, x2)
            a, b = classify(p), classify(p.swapped())
            assert a.contractible == b.contractible
            assert [c.verdict for c in a.components] == [c.verdict for c in reversed(b.components)]

    @pytest.mark.parametrize("twist", ["x1", "x2"])
    def test_contractible_is_monotone_in_twists(self, twist):
        for d1, d2, x1, x2 in box(1, 3):
            if not classify(family(d1, d2, x1, x2)).contractible:
                continue
            bumped = family(d1, d2, x1 + 1, x2) if twist == "x1" else family(d1, d2, x1, x2 + 1)
            assert classify(bumped).contractible

    def test_disagreement_raises(self, monkeypatch):
        monkeypatch.setattr(families.criterion, "find_grauert_certificate", lambda data: None)
        with pytest.raises(ConsistencyError):
            classify(family(1, 1, 2, 2))
