# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""
Shared test fixtures for nashcone core tests.
"""
import itertools
import json

import pytest

from nashcone.schemas import CurveClass, FamilyParams, ResolutionData


def family(d1: int, d2: int, x1: int, x2: int, genus: int = 0) -> FamilyParams:
    return FamilyParams(genus=genus, d1=d1, d2=d2, x1=x1, x2=x2)


def box(lo: int, hi: int):
    """Every (d1, d2, x1, x2) in [lo..hi]^4, lexicographic."""
    return list(itertools.product(range(lo, hi + 1), repeat=4))


@pytest.fixture
def p1122():
    """The smallest certified-bijective family member"""
    return family(1, 1, 2, 2)


@pytest.fixture
def data1122():
    """Resolution rows of family (1,1,2,2) written out by hand"""
    return ResolutionData(
        components=("S1", "S2"),
        curves=(
            CurveClass(name="C", intersections=(-1, -1)),
            CurveClass(name="F1", component="S1", intersections=(-2, 1)),
            CurveClass(name="F2", component="S2", intersections=(1, -2)),
        ),
    )


@pytest.fixture
def single_negative_curve():
    """One component with one negative curve"""
    return ResolutionData(
        components=("E",),
        curves=(CurveClass(name="z", component="E", intersections=(-1,)),),
    )


@pytest.fixture
def resolution_json():
    """Build resolution-file text from plain Python data"""
    def _build(components, curves):
        return json.dumps({"components": components, "curves": curves}, indent=2)
    return _build
