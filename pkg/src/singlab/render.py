"""Deterministic rendering of invariant reports.

Exact values survive serialization: JSON carries {"num", "den"} strings plus
a 15-significant-digit decimal convenience string, CSV carries "num/den"
text, and the table marks positive C with a trailing "+".
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import decimal_str
from .invariants import InvariantReport

__all__ = ["chain_text", "render_table", "render_json", "render_csv"]


def chain_text(chain: Sequence[int]) -> str:
    return "(" + ",".join(str(e) for e in chain) + ")"


def _num_den(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _rational_obj(x: Fraction) -> dict:
    return {
        "num": str(x.numerator),
        "den": str(x.denominator),
        "approx": decimal_str(x),
    }


def render_json(rows: Iterable[InvariantReport]) -> str:
    lines = []
    for row in rows:
        obj = {
            "p": row.p,
            "q": row.q,
            "chain": list(row.chain),
            "k": row.k,
            "sum_e": row.sum_e,
            "q_inv": row.q_inv,
            "eta": _rational_obj(row.eta),
            "b2": row.b2,
            "c": _rational_obj(row.c_value),
            "positive": row.positive,
            "label": row.label,
        }
        lines.append(json.dumps(obj))
    if not lines:
        return "[]\n"
    return "[\n" + ",\n".join(lines) + "\n]\n"


_CSV_HEADER = ["p", "q", "chain", "k", "sum_e", "q_inv", "eta", "b2", "c", "positive", "label"]


def render_csv(rows: Iterable[InvariantReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_HEADER)
    for row in rows:
        writer.writerow(
            [
                row.p,
                row.q,
                chain_text(row.chain),
                row.k,
                row.sum_e,
                row.q_inv,
                _num_den(row.eta),
                row.b2,
                _num_den(row.c_value),
                "true" if row.positive else "false",
                row.label,
            ]
        )
    return buf.getvalue()


_TABLE_COLUMNS = ["p", "q", "chain", "k", "sum_e", "q_inv", "eta", "b2", "C", "label"]
_RIGHT_ALIGNED = {"p", "q", "k", "sum_e", "q_inv", "eta", "b2", "C"}


def render_table(rows: Iterable[InvariantReport]) -> str:
    cells = []
    for row in rows:
        cells.append(
            {
                "p": str(row.p),
                "q": str(row.q),
                "chain": chain_text(row.chain),
                "k": str(row.k),
                "sum_e": str(row.sum_e),
                "q_inv": str(row.q_inv),
                "eta": _num_den(row.eta),
                "b2": str(row.b2),
                "C": _num_den(row.c_value) + ("+" if row.positive else ""),
                "label": row.label,
            }
        )
    widths = {
        col: max([len(col)] + [len(c[col]) for c in cells]) for col in _TABLE_COLUMNS
    }
    lines = []
    for record in [dict(zip(_TABLE_COLUMNS, _TABLE_COLUMNS))] + cells:
        parts = []
        for col in _TABLE_COLUMNS:
            if col in _RIGHT_ALIGNED:
                parts.append(record[col].rjust(widths[col]))
            else:
                parts.append(record[col].ljust(widths[col]))
        lines.append("  ".join(parts).rstrip())
    return "\n".join(lines) + "\n"
