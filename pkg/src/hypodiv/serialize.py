"""JSON and CSV encodings of division reports.

Exact quantities travel as ``"num/den"`` strings. Floats are written with 17
significant digits so that they round-trip.
"""
from __future__ import annotations

import csv
import io
import json

from .exact import format_rational
from .geometry import DivisionReport

CSV_HEADER = ("index", "phi", "cusp_index", "x", "y", "r_sq_num", "r_sq_den")


def format_float(x: float) -> str:
    text = format(float(x), ".17g")
    if not any(ch in text for ch in ".eEn"):
        text += ".0"
    return text


class _Float17(float):
    pass


def _encode(obj, indent: str, step: str) -> str:
    if isinstance(obj, _Float17):
        return format_float(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        inner = indent + step
        items = [f"{inner}{json.dumps(k)}: {_encode(v, inner, step)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + indent + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        inner = indent + step
        items = [f"{inner}{_encode(v, inner, step)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + indent + "]"
    return json.dumps(obj)


def dumps_json(obj, indent: int = 2) -> str:
    """``json.dumps`` look-alike that honours 17-digit float formatting."""

    def mark(o):
        if isinstance(o, float):
            return _Float17(o)
        if isinstance(o, dict):
            return {k: mark(v) for k, v in o.items()}
        if isinstance(o, (list, tuple)):
            return [mark(v) for v in o]
        return o

    return _encode(mark(obj), "", " " * indent) + "\n"


def report_to_dict(report: DivisionReport) -> dict:
    return {
        "shape": {"a": report.shape.a, "b": report.shape.b},
        "n": report.n,
        "total_arclength": format_rational(report.total_arclength),
        "degenerate": report.degenerate,
        "points": [
            {
                "index": p.index,
                "phi": p.position.phi,
                "cusp_index": p.position.cusp_index,
                "x": p.point.x,
                "y": p.point.y,
                "r": p.r,
                "r_squared": format_rational(p.r_squared),
            }
            for p in report.points
        ],
    }


def report_to_json(report: DivisionReport) -> str:
    return dumps_json(report_to_dict(report))


def report_to_csv(report: DivisionReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for p in report.points:
        writer.writerow([
            p.index,
            format_float(p.position.phi),
            p.position.cusp_index,
            format_float(p.point.x),
            format_float(p.point.y),
            p.r_squared.numerator,
            p.r_squared.denominator,
        ])
    return buf.getvalue()
