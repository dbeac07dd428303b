"""Plain / JSON / CSV / LaTeX rendering of classes and cycle rows."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .cycles import BiClass
from .exactalg import DPoly, HClass, format_poly, norm

__all__ = ["FORMATS", "coeff_str", "parse_coeff", "render_rows", "class_to_json", "class_from_json"]

FORMATS = ("plain", "json", "csv", "latex")


def coeff_str(c) -> str:
    return str(norm(c))


def parse_coeff(s: str):
    return norm(Fraction(s))


def class_to_json(obj, **meta) -> dict:
    """JSON-ready dict; coefficients are decimal strings."""
    if isinstance(obj, HClass):
        out = dict(meta, ambient_dim=obj.ambient_dim, type="HClass")
        out["coefficients"] = [coeff_str(c) for c in obj.coeffs]
    elif isinstance(obj, BiClass):
        out = dict(meta, ambient_dim=obj.ambient_dim, type="BiClass")
        out["coefficients"] = [coeff_str(c) for c in obj.coeffs]
    elif isinstance(obj, DPoly):
        out = dict(meta, type="DPoly")
        out["coefficients"] = [coeff_str(c) for c in obj.coeffs]
    elif isinstance(obj, (list, tuple)):
        out = dict(meta, type="sequence")
        out["coefficients"] = [coeff_str(c) for c in obj]
    else:
        out = dict(meta, type="scalar", value=coeff_str(obj))
    return out


def class_from_json(d: dict):
    if d["type"] == "scalar":
        return parse_coeff(d["value"])
    cs = [parse_coeff(s) for s in d["coefficients"]]
    if d["type"] == "HClass":
        return HClass(d["ambient_dim"], cs)
    if d["type"] == "BiClass":
        return BiClass(d["ambient_dim"], tuple(cs))
    if d["type"] == "DPoly":
        return DPoly(cs)
    if d["type"] == "sequence":
        return tuple(cs)
    raise ValueError(f"not a class record: {d['type']!r}")


def _plain(obj, var: str) -> str:
    if isinstance(obj, HClass):
        return format_poly(obj.coeffs, "H")
    if isinstance(obj, DPoly):
        return format_poly(obj.coeffs, var, descending=False)
    if isinstance(obj, BiClass):
        return "(" + ", ".join(coeff_str(c) for c in obj.coeffs) + ")"
    if isinstance(obj, (list, tuple)):
        return "(" + ", ".join(coeff_str(c) for c in obj) + ")"
    return coeff_str(obj)


def _latex_poly(coeffs, var: str, descending: bool = True) -> str:
    s = format_poly(coeffs, var, descending)
    # H^14 -> H^{14}
    out, i = [], 0
    while i < len(s):
        if s[i] == "^":
            j = i + 1
            while j < len(s) and s[j].isdigit():
                j += 1
            out.append("^{" + s[i + 1:j] + "}")
            i = j
        else:
            out.append(s[i])
            i += 1
    return "".join(out)


def _latex(rows) -> str:
    lines = []
    cycle_rows = [(label, obj) for label, obj in rows if isinstance(obj, BiClass)]
    other = [(label, obj) for label, obj in rows if not isinstance(obj, BiClass)]
    if other:
        lines.append(r"\begin{align*}")
        for label, obj in other:
            if isinstance(obj, HClass):
                body = _latex_poly(obj.coeffs, "H")
            elif isinstance(obj, DPoly):
                body = _latex_poly(obj.coeffs, "t", descending=False)
            else:
                body = _plain(obj, "t")
            lines.append(f"{label} =&~ {body} \\\\")
        lines.append(r"\end{align*}")
    if cycle_rows:
        N = cycle_rows[0][1].ambient_dim
        lines.append(r"\begin{tabular}{c | *{%d}{c}}" % N)
        heads = [f"$h_1^{{{N + 1 - j}}}h_2^{{{j}}}$" for j in range(1, N + 1)]
        lines.append(" Table & " + " & ".join(heads) + r" \\")
        lines.append(r"\hline")
        for label, obj in cycle_rows:
            lines.append(f"${label}$ & " + " & ".join(coeff_str(c) for c in obj.coeffs) + r" \\")
        lines.append(r"\end{tabular}")
    return "\n".join(lines)


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    width = 0
    for _, obj in rows:
        if isinstance(obj, (HClass, BiClass, DPoly)):
            width = max(width, len(obj.coeffs))
    first = rows[0][1] if rows else None
    if isinstance(first, HClass):
        w.writerow(["class"] + [f"H^{c}" for c in range(width)])
    elif isinstance(first, BiClass):
        N = first.ambient_dim
        w.writerow(["class"] + [f"h1^{N + 1 - j}h2^{j}" for j in range(1, N + 1)])
    elif isinstance(first, DPoly):
        w.writerow(["poly"] + [f"t^{k}" for k in range(width)])
    for label, obj in rows:
        if isinstance(obj, (HClass, BiClass, DPoly)):
            w.writerow([label] + [coeff_str(c) for c in obj.coeffs])
        elif isinstance(obj, (list, tuple)):
            w.writerow([label] + [coeff_str(c) for c in obj])
        else:
            w.writerow([label, coeff_str(obj)])
    return buf.getvalue().rstrip("\n")


def render_rows(rows: list[tuple[str, object]], fmt: str, meta: dict | None = None, var: str = "t") -> str:
    """Render labelled results. ``rows`` is a list of (label, object) pairs."""
    meta = meta or {}
    if fmt == "plain":
        if len(rows) == 1:
            return _plain(rows[0][1], var)
        return "\n".join(f"{label} = {_plain(obj, var)}" for label, obj in rows)
    if fmt == "json":
        recs = [class_to_json(obj, label=label, **meta) for label, obj in rows]
        payload = recs[0] if len(recs) == 1 else recs
        return json.dumps(payload, indent=2)
    if fmt == "csv":
        return _csv(rows)
    if fmt == "latex":
        return _latex(rows)
    raise ValueError(f"unknown format {fmt!r}")
