"""Deterministic JSON / CSV serialisation of reports."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Sequence


@dataclass
class Report:
    """A JSON payload plus the flat table used for CSV output."""

    payload: dict[str, Any]
    header: Sequence[str]
    rows: list[Sequence[Any]] = field(default_factory=list)
    ok: bool = True  # False turns into exit status 1

    def to_json_text(self) -> str:
        return json.dumps(self.payload, sort_keys=True, indent=2) + "\n"

    def to_csv_text(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.header)
        for row in self.rows:
            w.writerow([_cell(c) for c in row])
        return buf.getvalue()


def _cell(c: Any) -> str:
    if isinstance(c, bool):
        return "true" if c else "false"
    if c is None:
        return ""
    if isinstance(c, (dict, list)):
        return json.dumps(c, sort_keys=True, separators=(",", ":"))
    return str(c)


def emit(report: Report, fmt: str = "json") -> bytes:
    if fmt == "json":
        return report.to_json_text().encode()
    if fmt == "csv":
        return report.to_csv_text().encode()
    raise ValueError(f"unknown format {fmt!r}")
