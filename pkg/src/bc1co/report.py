"""Deterministic CSV and JSON emitters.

Floats are rendered with 17 significant digits so identical configurations
produce byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import IO, Iterable, Sequence

from .verify import VerificationReport

__all__ = ["format_value", "write_csv", "write_reports_json", "reports_to_json"]


def format_value(x) -> str:
    if isinstance(x, float):
        return f"{x:.17g}"
    if isinstance(x, complex):
        return f"{x.real:.17g}{x.imag:+.17g}j"
    return str(x)


def write_csv(header: Sequence[str], rows: Iterable[Sequence], out: IO[str]) -> None:
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(format_value(v) for v in row) + "\n")


class _FloatRepr(json.JSONEncoder):
    def default(self, o):  # pragma: no cover - only hit on exotic payloads
        return str(o)

    def iterencode(self, o, _one_shot=False):
        return super().iterencode(_round_floats(o), _one_shot)


def _round_floats(obj):
    if isinstance(obj, float):
        return float(f"{obj:.17g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def reports_to_json(reports: Sequence[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, cls=_FloatRepr) + "\n"


def write_reports_json(reports: Sequence[VerificationReport], path: str | Path) -> None:
    Path(path).write_text(reports_to_json(reports))
