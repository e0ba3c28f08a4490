# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""
Exception hierarchy shared by the library and the CLI
"""
from typing import Any, List, Optional


class NashconeError(Exception):
    """Base error carrying a human readable message and optional details."""

    def __init__(self, message: str, details: Any = None):
        self.message = message
        self.details = details
        super().__init__(self.message)


class StructuralError(NashconeError):
    """Shapes do not fit: dimension or length mismatch, malformed fan."""


class DomainError(NashconeError):
    """Input is well formed but mathematically outside the operation's domain."""


class ConsistencyError(NashconeError):
    """Two independent computations disagree, or a certificate failed re-verification."""


class ResolutionFileError(NashconeError):
    """A resolution file could not be parsed or validated."""

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        offenders: Optional[List[str]] = None,
    ):
        self.line = line
        self.offenders = offenders or []
        super().__init__(message, details={"line": line, "offenders": self.offenders})
