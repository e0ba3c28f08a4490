# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""
Services package

Certificate search, the two-component families, their toric models and reports
"""
from .criterion import (
    certify_essential,
    certify_nash_bijective,
    find_F_ij,
    find_grauert_certificate,
    kleiman_check,
)
from .families import classify, interval_feasibility, make_resolution_data
from .toric import ToricModel, build_fan, toricity_report, verify_intor

__all__ = [
    "certify_essential",
    "certify_nash_bijective",
    "find_F_ij",
    "find_grauert_certificate",
    "kleiman_check",
    "classify",
    "interval_feasibility",
    "make_resolution_data",
    "ToricModel",
    "build_fan",
    "toricity_report",
    "verify_intor",
]
