# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""nashcone CLI - Command-line interface for the nashcone certifier."""

__version__ = "0.3.0"
