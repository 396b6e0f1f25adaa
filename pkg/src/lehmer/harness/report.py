"""JSON, CSV and Markdown renderings of a VerificationReport."""

from __future__ import annotations

import csv
import io
import json

from .verify import VerificationReport

FIELDS = ("id", "source", "lhs", "rhs", "abs_diff", "status")
EXTRA_FIELDS = ("expected_status", "tolerance", "lhs_expr", "rhs_expr", "message")


def _num(value):
    if value is None:
        return None
    if isinstance(value, complex):
        if value.imag == 0:
            return value.real
        return f"{value.real!r}{value.imag:+.17g}j"
    return float(value)


def entry_dict(entry) -> dict:
    row = {
        "id": entry.id,
        "source": entry.source,
        "lhs": _num(entry.lhs),
        "rhs": _num(entry.rhs),
        "abs_diff": _num(entry.abs_diff),
        "status": entry.status,
        "expected_status": entry.expected_status,
        "tolerance": entry.tolerance,
        "lhs_expr": entry.lhs_expr,
        "rhs_expr": entry.rhs_expr,
        "message": entry.message,
    }
    return row


def to_json(report: VerificationReport) -> str:
    records = []
    for e in report.entries:
        row = entry_dict(e)
        row["pipelines"] = {name: _num(v) for name, v in sorted(e.pipelines.items())}
        records.append(row)
    return json.dumps({"records": records, "summary": report.summary}, indent=2) + "\n"


def to_csv(report: VerificationReport) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS + EXTRA_FIELDS, lineterminator="\n")
    writer.writeheader()
    for e in report.entries:
        row = entry_dict(e)
        writer.writerow({k: ("" if v is None else repr(v) if isinstance(v, float) else v) for k, v in row.items()})
    return buf.getvalue()


def _fmt(value) -> str:
    if value is None:
        return "n/a"
    if isinstance(value, str):
        return value
    return f"{value:.15g}"


def to_markdown(report: VerificationReport) -> str:
    lines = [
        "| id | source | lhs | rhs | abs_diff | status |",
        "|---|---|---|---|---|---|",
    ]
    for e in report.entries:
        row = entry_dict(e)
        diff = "n/a" if row["abs_diff"] is None else f"{row['abs_diff']:.3e}"
        lines.append(
            f"| {row['id']} | {row['source']} | {_fmt(row['lhs'])} | {_fmt(row['rhs'])} | {diff} | {row['status']} |"
        )
    s = report.summary
    lines.append("")
    lines.append(
        f"{s['total']} records: {s['CONFIRMED']} confirmed, {s['ERRATUM']} errata, "
        f"{s['UNRESOLVED']} unresolved, {s['unexpected']} unexpected"
    )
    return "\n".join(lines) + "\n"


def to_plain(report: VerificationReport) -> str:
    out = []
    width = max((len(e.id) for e in report.entries), default=0)
    for e in report.entries:
        row = entry_dict(e)
        diff = "n/a" if row["abs_diff"] is None else f"{row['abs_diff']:.3e}"
        flag = "" if e.as_expected else f"  (expected {e.expected_status})"
        out.append(f"{e.status:<10} {e.id:<{width}} lhs={_fmt(row['lhs'])} rhs={_fmt(row['rhs'])} diff={diff}{flag}")
        if e.message:
            out.append(f"           {e.message}")
    s = report.summary
    out.append(
        f"{s['total']} records: {s['CONFIRMED']} confirmed, {s['ERRATUM']} errata, "
        f"{s['UNRESOLVED']} unresolved, {s['unexpected']} unexpected"
    )
    return "\n".join(out) + "\n"


FORMATTERS = {"json": to_json, "csv": to_csv, "md": to_markdown, "plain": to_plain}
