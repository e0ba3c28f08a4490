# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""nashcone - exact ampleness certificates for exceptional divisors."""

__version__ = "0.3.0"
