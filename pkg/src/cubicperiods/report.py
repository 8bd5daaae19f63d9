"""Report rendering (JSON, CSV, markdown) and the built-in reference table
for conductor 819."""

from __future__ import annotations

import csv
import io
import json
from enum import Enum
from fractions import Fraction

from .cubicpoly import RationalCubic


class ReportFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    MARKDOWN = "md"


def format_rational(x: Fraction) -> str:
    """Lowest-terms "p/q" string; plain "p" when the denominator is 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_poly(p: RationalCubic, var: str = "X") -> str:
    parts: list[str] = []
    for coeff, power in zip(p.coefficients(), (3, 2, 1, 0)):
        if coeff == 0:
            continue
        mag = format_rational(abs(coeff))
        if power == 0:
            term = mag
        else:
            xp = var if power == 1 else f"{var}^{power}"
            term = xp if mag == "1" else f"{mag}*{xp}"
        if not parts:
            parts.append(term if coeff > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if coeff > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"


def format_relation(scale: int, offset: int, var: str = "rho") -> str:
    """Render eta = scale*rho + offset."""
    if scale == 1:
        head = var
    elif scale == -1:
        head = f"-{var}"
    else:
        head = f"{scale}*{var}"
    if offset == 0:
        return head
    sign = "+" if offset > 0 else "-"
    return f"{head} {sign} {abs(offset)}"


# Reference data for conductor 819 = 9 * 7 * 13: the four pairs, the linear
# relation between each period triple and the roots of the matching cubic,
# the cubic itself, and the period polynomial.  Rows are ordered by n2.
TABLE_CONDUCTOR = 819
GOLDEN_TABLE_ROWS = (
    {
        "pair": "(-30, 1)",
        "eta_relation": "rho + 10",
        "shanks": "X^3 + 30*X^2 + 27*X - 1",
        "period_poly": "X^3 - 273*X + 1729",
    },
    {
        "pair": "(18, 5)",
        "eta_relation": "5*rho - 6",
        "shanks": "X^3 - 18/5*X^2 - 33/5*X - 1",
        "period_poly": "X^3 - 273*X - 1547",
    },
    {
        "pair": "(-3, 10)",
        "eta_relation": "10*rho + 1",
        "shanks": "X^3 + 3/10*X^2 - 27/10*X - 1",
        "period_poly": "X^3 - 273*X - 728",
    },
    {
        "pair": "(-18, 11)",
        "eta_relation": "11*rho + 6",
        "shanks": "X^3 + 18/11*X^2 - 15/11*X - 1",
        "period_poly": "X^3 - 273*X + 91",
    },
)

_FIELD_COLUMNS = (
    "M",
    "N",
    "n1",
    "n2",
    "shanks",
    "period_poly",
    "periods",
    "verdicts",
    "residual",
)


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def _flatten(value) -> str:
    if isinstance(value, list):
        return " ".join(str(v) for v in value)
    if isinstance(value, dict):
        return ";".join(f"{k}={'pass' if v else 'FAIL'}" for k, v in value.items())
    return str(value)


def _render_fields_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("conductor", "kind") + _FIELD_COLUMNS)
    for entry in report["fields"]:
        writer.writerow(
            [report["conductor"], report["kind"]]
            + [_flatten(entry[c]) if c in entry else "" for c in _FIELD_COLUMNS]
        )
    return buf.getvalue()


def _render_fields_markdown(report: dict) -> str:
    lines = [f"# conductor {report['conductor']} ({report['kind']})", ""]
    for note in report.get("notes", ()):
        lines.append(f"note: {note}")
    if report.get("notes"):
        lines.append("")
    cols = [c for c in _FIELD_COLUMNS if any(c in e for e in report["fields"])]
    lines.append("| " + " | ".join(cols) + " |")
    lines.append("|" + "|".join(" --- " for _ in cols) + "|")
    for entry in report["fields"]:
        lines.append(
            "| " + " | ".join(_flatten(entry[c]) if c in entry else "" for c in cols) + " |"
        )
    return "\n".join(lines) + "\n"


def _render_table_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    cols = ("pair", "eta_relation", "shanks", "period_poly")
    writer.writerow(("conductor",) + cols)
    for row in report["rows"]:
        writer.writerow([report["conductor"]] + [row[c] for c in cols])
    return buf.getvalue()


def _render_table_markdown(report: dict) -> str:
    lines = [f"# conductor {report['conductor']}", ""]
    lines.append("| (n1, n2) | eta relation | shanks cubic | period polynomial |")
    lines.append("| --- | --- | --- | --- |")
    for row in report["rows"]:
        lines.append(
            f"| {row['pair']} | {row['eta_relation']} | {row['shanks']} "
            f"| {row['period_poly']} |"
        )
    return "\n".join(lines) + "\n"


def _render_summary_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    keys = list(report.keys())
    writer.writerow(keys)
    writer.writerow([_flatten(report[k]) for k in keys])
    return buf.getvalue()


def _render_summary_markdown(report: dict) -> str:
    lines = ["# scan summary", ""]
    for k, v in report.items():
        lines.append(f"- {k}: {_flatten(v)}")
    return "\n".join(lines) + "\n"


def render_report(report: dict, fmt: ReportFormat) -> str:
    """Serialize a report dict; the dict shape selects the layout."""
    if fmt is ReportFormat.JSON:
        return render_json(report)
    if "fields" in report:
        return (
            _render_fields_csv(report)
            if fmt is ReportFormat.CSV
            else _render_fields_markdown(report)
        )
    if "rows" in report:
        return (
            _render_table_csv(report)
            if fmt is ReportFormat.CSV
            else _render_table_markdown(report)
        )
    return (
        _render_summary_csv(report)
        if fmt is ReportFormat.CSV
        else _render_summary_markdown(report)
    )
