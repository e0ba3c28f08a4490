# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""
End-to-end checks over whole parameter boxes of the two-component families
"""
import itertools
import json
import random

import pytest

from nashcone.errors import DomainError
from nashcone.lattice import LinearForm, det
from nashcone.resolution_file import dump_resolution_file, parse_resolution_file
from nashcone.schemas import ExceptionalDivisor
from nashcone.services import criterion, families, toric
from nashcone.services.report import (
    EXIT_CERTIFIED,
    EXIT_NOT_CONTRACTIBLE,
    EXIT_UNDETERMINED,
    classify_report,
    exit_code,
    resolution_report,
    verdict_section,
)

from .conftest import box, family

BOX_5 = box(1, 5)
CONVEX_BOX_5 = [t for t in BOX_5 if t[2] * t[3] > 1]


def _sample(rng: random.Random, count: int, hi: int = 5):
    return [tuple(rng.randint(1, hi) for _ in range(4)) for _ in range(count)]


class TestFamilyVerdicts:
    """Contractibility and bijectivity over [1..5]^4, closed form and solver together"""

    def test_all_tuples(self):
        assert len(BOX_5) == 625
        for d1, d2, x1, x2 in BOX_5:
            # classify raises ConsistencyError if the two computations disagree
            result = families.classify(family(d1, d2, x1, x2))
            assert result.contractible == (max(x1, x2) >= 2), (d1, d2, x1, x2)
            assert (result.nash == "certified") == (min(x1, x2) >= 2), (d1, d2, x1, x2)

    def test_solver_alone(self):
        for t in BOX_5[::7]:
            data = families.make_resolution_data(family(*t))
            nash = criterion.certify_nash_bijective(data)
            assert (criterion.find_grauert_certificate(data) is not None) == (max(t[2:]) >= 2)
            assert (nash.verdict == "certified") == (min(t[2:]) >= 2)


class TestToricIntersections:
    """Wall relations of the toric model against the abstract rows"""

    def test_all_convex_tuples(self):
        for t in CONVEX_BOX_5:
            p = family(*t)
            ok, table = toric.verify_intor(toric.build_fan(p), p)
            assert ok, t
            d1, d2, x1, x2 = t
            assert [c.computed for c in table[:4]] == [-d2, -d1, -x1, -x2]

    def test_matches_abstract_rows(self):
        for t in CONVEX_BOX_5[::5]:
            p = family(*t)
            rows = {c.name: c.intersections for c in families.make_resolution_data(p).curves}
            table = {c.label: c.computed for c in toric.verify_intor(toric.build_fan(p), p)[1]}
            assert (table["V<b,c>.V_b"], table["V<b,c>.V_c"]) == rows["C"]
            assert (table["V<b,e>.V_b"], table["V<b,e>.V_c"]) == rows["F1"]
            assert (table["V<c,e>.V_b"], table["V<c,e>.V_c"]) == rows["F2"]


class TestFanRegularity:
    """Unimodular maximal cones, convex gamma and the pairing certificate"""

    def test_all_convex_tuples(self):
        for t in CONVEX_BOX_5:
            p = family(*t)
            model = toric.build_fan(p)
            for names in model.fan.max_cones:
                assert abs(det([model.fan.rays[n] for n in names])) == 1, (t, names)
            d1, d2, x1, x2 = t
            assert toric.convexity_certificate(model, p) == (x1 * x2 - 1, d1 + x2 * d2)

    @pytest.mark.parametrize("d1, d2", itertools.product(range(1, 6), repeat=2))
    def test_refuses_degenerate_gamma(self, d1, d2):
        with pytest.raises(DomainError):
            toric.build_fan(family(d1, d2, 1, 1))


class TestOracle:
    """Solver feasibility against brute-force enumeration over [1..50]^2"""

    def test_all_pairs(self):
        for t in box(1, 4):
            data = families.make_resolution_data(family(*t))
            for i, j in itertools.permutations(range(2), 2):
                found = criterion.find_F_ij(data, i, j)
                brute = criterion.brute_force_F_ij(data, i, j, bound=50)
                assert (found is None) == (brute is None), (t, i, j)
                if found is not None:
                    assert criterion.kleiman_check(data, found)
                    assert found.coeffs[i] < found.coeffs[j]
                    # Both return the minimal-sum, lexicographically first point
                    assert found.coeffs == brute.coeffs


class TestCertificateAlgebra:
    """Certificates are closed under positive scaling and addition"""

    @pytest.mark.parametrize("t", [(1, 1, 2, 2), (2, 3, 3, 2), (5, 1, 4, 5), (3, 2, 1, 3)])
    def test_scaling_and_sums(self, t):
        rng = random.Random(hash(t) & 0xFFFF)
        data = families.make_resolution_data(family(*t))
        pool = [
            ExceptionalDivisor.of(a1, a2)
            for a1, a2 in itertools.product(range(1, 31), repeat=2)
            if criterion.kleiman_check(data, ExceptionalDivisor.of(a1, a2))
        ]
        assert pool
        for _ in range(200):
            F, G = rng.choice(pool), rng.choice(pool)
            k = rng.randint(1, 9)
            assert criterion.kleiman_check(data, F.scale(k))
            assert criterion.kleiman_check(data, F + G)
            if F.coeffs[0] < F.coeffs[1] and G.coeffs[0] < G.coeffs[1]:
                assert (F + G).coeffs[0] < (F + G).coeffs[1]

    def test_canonical_certificate_is_stable(self):
        rng = random.Random(7)
        for t in _sample(rng, 30):
            data = families.make_resolution_data(family(*t))
            first = [criterion.find_F_ij(data, 0, 1), criterion.find_F_ij(data, 1, 0)]
            again = [criterion.find_F_ij(data, 0, 1), criterion.find_F_ij(data, 1, 0)]
            assert first == again


class TestToricity:
    """Toric exactly for rational C, and the smooth representatives"""

    @pytest.mark.parametrize("genus", [0, 1, 2, 3])
    def test_sampled(self, genus):
        rng = random.Random(100 + genus)
        sampled = [t for t in _sample(rng, 80) if t[2] * t[3] > 1][:50]
        assert len(sampled) == 50
        for t in sampled:
            report = toric.toricity_report(family(*t, genus=genus))
            assert report.is_toric == (genus == 0)
            assert report.smooth_representatives == (genus, genus)

    def test_character_divisors(self):
        model = toric.build_fan(family(1, 1, 2, 2))
        assert toric.character_divisor(model, LinearForm.dual_basis(3, 0)) == {
            "a": 1, "b": 0, "c": -1, "d": -2, "e": 0, "f": -1,
        }
        assert toric.character_divisor(model, LinearForm.dual_basis(3, 1)) == {
            "a": 0, "b": 1, "c": 2, "d": 3, "e": 0, "f": 3,
        }


class TestRoundTrip:
    """Exported family data re-checked as a general resolution file"""

    def test_sampled(self):
        rng = random.Random(2024)
        for t in _sample(rng, 100):
            genus = rng.randint(0, 3)
            p = family(*t, genus=genus)
            from_family = classify_report(p)
            data = parse_resolution_file(dump_resolution_file(families.make_resolution_data(p)))
            from_file = resolution_report(data)
            assert json.dumps(verdict_section(from_file), indent=2) == json.dumps(
                verdict_section(from_family), indent=2
            )
            assert exit_code(from_file) == exit_code(from_family)

    @pytest.mark.parametrize(
        "t, expected",
        [((1, 1, 2, 2), EXIT_CERTIFIED), ((1, 1, 1, 3), EXIT_UNDETERMINED), ((4, 2, 1, 1), EXIT_NOT_CONTRACTIBLE)],
    )
    def test_exit_codes(self, t, expected):
        assert exit_code(classify_report(family(*t))) == expected
