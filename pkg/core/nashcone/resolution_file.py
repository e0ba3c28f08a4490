# Copyright (C) 2025 demigodmode
# SPDX-License-Identifier: AGPL-3.0-only

"""
JSON resolution files

    {
      "components": ["S1", "S2"],
      "curves": [
        {"name": "C", "intersections": [-1, -1]},
        {"name": "F1", "component": "S1", "intersections": [-2, 1]}
      ]
    }

Numbers must be exact integer lexemes; floats, NaN and booleans are rejected.
"""
import json
import logging
from collections import Counter
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, StrictInt, StrictStr, ValidationError

from .errors import ResolutionFileError
from .schemas import CurveClass, ResolutionData, uncovered_components

logger = logging.getLogger(__name__)


class CurveEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: StrictStr
    component: Optional[StrictStr] = None
    intersections: List[StrictInt]


class ResolutionFile(BaseModel):
    """On-disk shape of ResolutionData."""
    model_config = ConfigDict(extra="forbid")

    components: List[StrictStr]
    curves: List[CurveEntry]


def _reject_float(lexeme: str):
    raise ValueError(f"non-integer number {lexeme!r}")


def _reject_constant(lexeme: str):
    raise ValueError(f"non-finite number {lexeme!r}")


def _line_of(text: str, needle: str) -> Optional[int]:
    for number, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return number
    return None


def _load(text: str):
    try:
        return json.loads(text, parse_float=_reject_float, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise ResolutionFileError(f"malformed JSON: {e.msg}", line=e.lineno) from e
    except ValueError as e:
        # Raised by the number hooks; the decoder gives no position for these
        lexeme = str(e).split("'")[1] if "'" in str(e) else ""
        raise ResolutionFileError(str(e), line=_line_of(text, lexeme) if lexeme else None) from e


def _duplicates(names: List[str]) -> List[str]:
    return sorted(name for name, count in Counter(names).items() if count > 1)


def parse_resolution_file(text: str) -> ResolutionData:
    """
    Parse and validate a resolution file

    Raises ResolutionFileError with a line number for syntax errors and with
    the offending names for validation errors.
    """
    raw = _load(text)
    try:
        parsed = ResolutionFile.model_validate(raw)
    except ValidationError as e:
        offenders = sorted({".".join(str(p) for p in err["loc"]) or "document" for err in e.errors()})
        raise ResolutionFileError(
            f"invalid resolution file: {e.error_count()} error(s)", offenders=offenders
        ) from e

    if not parsed.components:
        raise ResolutionFileError("at least one exceptional component is required", offenders=["components"])
    if not parsed.curves:
        raise ResolutionFileError("at least one curve class is required", offenders=["curves"])

    dup_components = _duplicates(parsed.components)
    if dup_components:
        raise ResolutionFileError("duplicate component names", offenders=dup_components)
    dup_curves = _duplicates([c.name for c in parsed.curves])
    if dup_curves:
        raise ResolutionFileError("duplicate curve names", offenders=dup_curves)

    n = len(parsed.components)
    wrong_length = [c.name for c in parsed.curves if len(c.intersections) != n]
    if wrong_length:
        raise ResolutionFileError(
            f"intersection rows must have {n} entries, one per component", offenders=wrong_length
        )
    unknown = [
        c.name for c in parsed.curves
        if c.component is not None and c.component not in parsed.components
    ]
    if unknown:
        raise ResolutionFileError("curves refer to unknown components", offenders=unknown)
    uncovered = uncovered_components(parsed.components, [c.component for c in parsed.curves])
    if uncovered:
        raise ResolutionFileError("components without a curve generator", offenders=uncovered)

    data = ResolutionData(
        components=tuple(parsed.components),
        curves=tuple(
            CurveClass(name=c.name, component=c.component, intersections=tuple(c.intersections))
            for c in parsed.curves
        ),
    )
    logger.debug(f"parsed resolution file: {data.size} components, {len(data.curves)} curves")
    return data


def dump_resolution_file(data: ResolutionData) -> str:
    """Serialize with stable key order and 2-space indent."""
    document = {
        "components": list(data.components),
        "curves": [
            {
                "name": c.name,
                **({"component": c.component} if c.component is not None else {}),
                "intersections": list(c.intersections),
            }
            for c in data.curves
        ],
    }
    return json.dumps(document, indent=2) + "\n"
