"""Structured experiment reports with stable CSV/JSON serialization.

CSV: one header line, comma separated, floats printed with 12 significant
digits, no locale dependence.  JSON: a single object
{command, parameters, rows, summary, schema_version}.  Serialization is a
pure function of the report contents, so identical runs produce identical
bytes.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field

__all__ = ["Report", "REPORT_SCHEMA"]

SCHEMA_VERSION = 1

REPORT_SCHEMA = {
    "type": "object",
    "required": ["command", "parameters", "rows", "summary", "schema_version"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "parameters": {"type": "object"},
        "rows": {"type": "array", "items": {"type": "object"}},
        "summary": {"type": "object"},
        "schema_version": {"const": SCHEMA_VERSION},
    },
}


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def _jsonable(v):
    if isinstance(v, bool) or isinstance(v, (int, float, str)) or v is None:
        return v
    return str(v)


@dataclass
class Report:
    command: str
    parameters: dict
    rows: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    def columns(self) -> list[str]:
        return list(self.rows[0].keys()) if self.rows else []

    def to_csv(self) -> str:
        out = io.StringIO()
        cols = self.columns()
        out.write(",".join(cols) + "\n")
        for row in self.rows:
            out.write(",".join(_fmt(row[c]) for c in cols) + "\n")
        return out.getvalue()

    def to_json(self) -> str:
        obj = {
            "command": self.command,
            "parameters": {k: _jsonable(v) for k, v in self.parameters.items()},
            "rows": [{k: _jsonable(v) for k, v in r.items()} for r in self.rows],
            "summary": {k: _jsonable(v) for k, v in self.summary.items()},
            "schema_version": self.schema_version,
        }
        return json.dumps(obj, indent=2, sort_keys=False) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise ValueError(f"unknown format {fmt!r}")
