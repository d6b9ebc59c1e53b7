"""Table rows and their text/JSON/CSV rendering."""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import asdict, dataclass
from importlib import resources

MATCH_TOL = 1e-4
DEFAULT_PRECISION = 6

ROW_SCHEMA = {
    "type": "array",
    "minItems": 1,
    "items": {
        "type": "object",
        "required": ["k", "value", "reference_value", "status"],
        "properties": {
            "k": {"type": "integer", "minimum": 0},
            "value": {"type": "number"},
            "reference_value": {"type": ["number", "null"]},
            "status": {"enum": ["match", "mismatch", "no-reference"]},
            "expression": {"type": ["string", "null"]},
            "oracle_value": {"type": ["number", "null"]},
        },
    },
}


@dataclass(frozen=True)
class ReportRow:
    k: int
    value: float
    reference_value: float | None = None
    expression: str | None = None
    oracle_value: float | None = None

    @property
    def status(self) -> str:
        if self.reference_value is None:
            return "no-reference"
        return "match" if abs(self.value - self.reference_value) <= MATCH_TOL else "mismatch"

    @property
    def delta(self) -> float | None:
        return None if self.reference_value is None else self.value - self.reference_value

    def to_dict(self) -> dict:
        d = asdict(self)
        d["status"] = self.status
        return d


def precision() -> int:
    raw = os.environ.get("ECHKIT_PRECISION")
    if raw is None:
        return DEFAULT_PRECISION
    try:
        p = int(raw)
    except ValueError:
        return DEFAULT_PRECISION
    return max(0, min(p, 17))


def fmt(v, prec=None) -> str:
    if v is None:
        return "-"
    return f"{float(v):.{precision() if prec is None else prec}f}"


def load_reference_table() -> dict:
    text = resources.files("echkit").joinpath("data/reference_table.json").read_text()
    return json.loads(text)


def _status_text(row: ReportRow) -> str:
    if row.status == "mismatch":
        return f"MISMATCH(δ={row.delta:+.{precision()}f})"
    return row.status


def emit_table(rows, fmt_name: str = "text") -> str:
    rows = list(rows)
    if not rows:
        raise ValueError("no rows to emit")
    if fmt_name == "json":
        return json.dumps([r.to_dict() for r in rows], indent=2)
    if fmt_name == "csv":
        return emit_csv(["k", "expression", "value", "oracle_value", "reference_value", "status"],
                        [[r.k, r.expression or "", repr(r.value),
                          "" if r.oracle_value is None else repr(r.oracle_value),
                          "" if r.reference_value is None else repr(r.reference_value), r.status] for r in rows])
    header = ["k", "expression", "value", "oracle", "reference", "status"]
    body = [[f"c{r.k}", r.expression or "-", fmt(r.value), fmt(r.oracle_value), fmt(r.reference_value),
             _status_text(r)] for r in rows]
    return emit_text(header, body)


def emit_text(header, body) -> str:
    widths = [max(len(str(x)) for x in col) for col in zip(header, *body)]
    lines = ["  ".join(str(x).ljust(w) for x, w in zip(line, widths)).rstrip() for line in [header, *body]]
    return "\n".join(lines)


def emit_csv(header, body) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(body)
    return buf.getvalue().rstrip("\n")
