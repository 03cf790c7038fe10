"""Bound reports and their canonical serialization.

Report output is deterministic down to the byte: floats are written with 17
significant digits (enough to round-trip an IEEE double exactly), negative
zero is normalized away, keys are sorted, and every writer appends a single
trailing newline.  Running the same seeded command twice must produce
identical files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ._version import __version__

__all__ = [
    "ATTAINMENT_TOLERANCE",
    "MARGIN_TOLERANCE",
    "BoundReport",
    "format_float",
    "canonical_json",
    "reports_to_json",
    "reports_to_csv",
    "sweep_to_json",
    "sweep_to_csv",
    "violation_exit_code",
]

# A value counts as attaining its bound when it gets this close.
ATTAINMENT_TOLERANCE = 1e-6
# Margins below this are genuine violations (numerical noise allowance).
MARGIN_TOLERANCE = -1e-9

SWEEP_COLUMNS = ("theta_rad", "classical_bound", "qm_value", "tsirelson_bound")
REPORT_COLUMNS = ("track", "value", "bound", "margin", "attained", "seed", "version")


@dataclass(frozen=True)
class BoundReport:
    """One track's computed value against its bound, plus the run's inputs.

    ``details`` carries optional per-track diagnostics (identity residuals,
    sampling estimates); it rides along in JSON output but stays out of the
    fixed CSV columns.
    """

    track: str
    value: float
    bound: float
    inputs: Mapping[str, object]
    seed: int
    version: str = __version__
    details: Mapping[str, object] = field(default_factory=dict)

    @property
    def margin(self) -> float:
        return self.bound - self.value

    @property
    def attained(self) -> bool:
        return self.margin <= ATTAINMENT_TOLERANCE

    @property
    def violated(self) -> bool:
        return self.margin < MARGIN_TOLERANCE

    def as_mapping(self) -> dict[str, object]:
        out = {
            "track": self.track,
            "value": self.value,
            "bound": self.bound,
            "margin": self.margin,
            "attained": self.attained,
            "inputs": dict(self.inputs),
            "seed": self.seed,
            "version": self.version,
        }
        if self.details:
            out["details"] = dict(self.details)
        return out


def format_float(x: float) -> str:
    """17-significant-digit decimal form of a float; rejects non-finite values."""
    if not isinstance(x, float):
        raise TypeError(f"expected float, got {type(x).__name__}")
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite float {x!r}")
    if x == 0.0:
        x = 0.0  # normalize -0.0 so output parses back to the same value
    return format(x, ".17g")


def _json_fragment(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, str):
        out = ['"']
        for ch in value:
            if ch == '"':
                out.append('\\"')
            elif ch == "\\":
                out.append("\\\\")
            elif ord(ch) < 0x20:
                out.append(f"\\u{ord(ch):04x}")
            else:
                out.append(ch)
        out.append('"')
        return "".join(out)
    if value is None:
        return "null"
    raise TypeError(f"cannot serialize {type(value).__name__} as a JSON scalar")


def _write_json(value: object, indent: int, pieces: list[str]) -> None:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, Mapping):
        if not value:
            pieces.append("{}")
            return
        pieces.append("{\n")
        keys = sorted(value)
        for i, key in enumerate(keys):
            if not isinstance(key, str):
                raise TypeError(f"JSON object keys must be strings, got {key!r}")
            pieces.append(inner)
            pieces.append(_json_fragment(key))
            pieces.append(": ")
            _write_json(value[key], indent + 1, pieces)
            pieces.append(",\n" if i + 1 < len(keys) else "\n")
        pieces.append(pad + "}")
    elif isinstance(value, (list, tuple)):
        if not value:
            pieces.append("[]")
            return
        pieces.append("[\n")
        for i, item in enumerate(value):
            pieces.append(inner)
            _write_json(item, indent + 1, pieces)
            pieces.append(",\n" if i + 1 < len(value) else "\n")
        pieces.append(pad + "]")
    else:
        pieces.append(_json_fragment(value))


def canonical_json(value: object) -> str:
    """Deterministic JSON text: sorted keys, 2-space indent, trailing newline."""
    pieces: list[str] = []
    _write_json(value, 0, pieces)
    pieces.append("\n")
    return "".join(pieces)


def reports_to_json(reports: Sequence[BoundReport]) -> str:
    return canonical_json({"reports": [r.as_mapping() for r in reports]})


def _csv_cell(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def reports_to_csv(reports: Sequence[BoundReport]) -> str:
    lines = [",".join(REPORT_COLUMNS)]
    for r in reports:
        row = (r.track, r.value, r.bound, r.margin, r.attained, r.seed, r.version)
        lines.append(",".join(_csv_cell(cell) for cell in row))
    return "\n".join(lines) + "\n"


def sweep_rows(points: Sequence[tuple[float, float]], classical: float, tsirelson: float):
    for theta, value in points:
        yield theta, classical, value, tsirelson


def sweep_to_json(points: Sequence[tuple[float, float]], classical: float, tsirelson: float) -> str:
    rows = [
        dict(zip(SWEEP_COLUMNS, row))
        for row in sweep_rows(points, classical, tsirelson)
    ]
    return canonical_json({"sweep": rows})


def sweep_to_csv(points: Sequence[tuple[float, float]], classical: float, tsirelson: float) -> str:
    lines = [",".join(SWEEP_COLUMNS)]
    for row in sweep_rows(points, classical, tsirelson):
        lines.append(",".join(format_float(cell) for cell in row))
    return "\n".join(lines) + "\n"


def violation_exit_code(reports: Sequence[BoundReport]) -> int:
    """0 when every margin is within tolerance, 3 when any bound is violated."""
    return 3 if any(r.violated for r in reports) else 0
