"""Command-line interface.

Exit codes: 0 success, 1 verification regression, 2 invalid input or domain
error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from .closedform import MAX_JET_ORDER, euler_apply, logdiff, root_sum
from .errors import LehmerError
from .harness import FORMATTERS, bundled_registry, cross_check, run_registry
from .harness.verify import admissible
from .polyroots import eval_derivative, find_roots, lehmer_polynomial
from .quadrature import lehmer_integral, weighted_integral
from .series import SeriesSpec, radius, sum_direct

EXIT_OK = 0
EXIT_REGRESSION = 1
EXIT_INPUT = 2

_VALUE_FLAGS = ("--z", "--z-grid")


def parse_complex(text: str) -> complex:
    """Parse 'a', 'a/b', 'bi' or 'a+bi'; a float comes back when there is no imaginary part."""
    raw = text.replace(" ", "")
    try:
        if raw.endswith(("i", "j")):
            return complex(raw[:-1] + "j")
        return float(Fraction(raw))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"cannot parse {text!r} as a number (use a, a/b or a+bi)") from None


def _fmt(value) -> str:
    if isinstance(value, complex):
        if value.imag == 0:
            return f"{value.real:.15g}"
        return f"{value.real:.15g}{value.imag:+.15g}i"
    return f"{value:.15g}"


def _json_num(value):
    if isinstance(value, complex):
        return value.real if value.imag == 0 else [value.real, value.imag]
    return value


def _emit_rows(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps([{k: _json_num(v) for k, v in r.items()} for r in rows], indent=2) + "\n")
        return
    if not rows:
        out.write("" if fmt == "csv" else "(no rows)\n")
        return
    fields = list(rows[0].keys())
    for r in rows[1:]:
        fields += [k for k in r if k not in fields]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: (_fmt(v) if isinstance(v, (float, complex)) else v) for k, v in r.items()})
        out.write(buf.getvalue())
    elif fmt == "md":
        out.write("| " + " | ".join(fields) + " |\n")
        out.write("|" + "---|" * len(fields) + "\n")
        for r in rows:
            cells = [_fmt(r[k]) if isinstance(r.get(k), (float, complex)) else str(r.get(k, "")) for k in fields]
            out.write("| " + " | ".join(cells) + " |\n")
    else:
        for r in rows:
            out.write("  ".join(f"{k}={_fmt(v) if isinstance(v, (float, complex)) else v}" for k, v in r.items()) + "\n")


def cmd_eval(args, out) -> int:
    s, k, z, start = args.s, args.k, args.z, args.start
    spec = SeriesSpec(s, k, z, start)
    methods = ["series", "integral", "rootsum"] if args.method == "all" else [args.method]
    offset = spec.zero_term
    if args.method in ("all", "series") and not admissible(s, z):
        raise LehmerError(f"|z| = {abs(z):.15g} is outside the convergence disc |z| < radius {radius(s):.15g} for s = {s}")
    rows = []
    values = {}
    for method in methods:
        if method == "series":
            res = sum_direct(spec, max_terms=args.max_terms)
            values[method] = res.value
            rows.append({"method": "series", "value": res.value, "error_estimate": res.truncation_bound, "terms": res.terms_used})
        elif method == "integral":
            if k >= 1:
                res = weighted_integral(s, k, z, tol=min(args.tol, 1e-12))
                value = res.value
            else:
                res = lehmer_integral(s, z, tol=min(args.tol, 1e-12))
                value = res.value - 1 + offset
            values[method] = value
            rows.append({"method": "integral", "value": value, "error_estimate": res.error_estimate, "panels": res.subdivisions})
        elif method == "rootsum":
            if z == 0:
                rows.append({"method": "rootsum", "value": "skipped", "note": "z = 0 excluded"})
                continue
            if k > MAX_JET_ORDER:
                rows.append({"method": "rootsum", "value": "skipped", "note": f"k > {MAX_JET_ORDER}"})
                continue
            value = euler_apply(s, z, k) if k >= 1 else root_sum(s, z) - 1 + offset
            values[method] = value
            rows.append({"method": "rootsum", "value": value})
    if len(values) > 1:
        vals = list(values.values())
        dev = max(abs(a - b) for a in vals for b in vals)
        rows.append({"method": "max_pairwise_deviation", "value": dev})
    _emit_rows(rows, args.format, out)
    return EXIT_OK


def cmd_roots(args, out) -> int:
    poly = lehmer_polynomial(args.s, args.z)
    roots = find_roots(poly)
    rows = []
    for rho, resid in zip(roots.roots, roots.residual_per_root):
        safe = not (abs(rho.imag) <= 1e-9 and -1e-9 <= rho.real <= 1 + 1e-9)
        rows.append(
            {
                "root": rho,
                "residual": resid,
                "H_prime": eval_derivative(poly, rho),
                "logdiff": logdiff(rho) if safe else "n/a",
                "branch_safe": "yes" if safe else "NO (root on [0, 1])",
            }
        )
    _emit_rows(rows, args.format, out)
    if args.format == "plain":
        out.write(f"min separation {roots.min_pairwise_separation:.6g}; near-multiple: {roots.near_multiple}\n")
    return EXIT_OK


def cmd_identities(args, out) -> int:
    report = run_registry(bundled_registry(), parallelism=args.parallel, tolerance=args.tol)
    text = FORMATTERS[args.format](report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK if report.all_expected else EXIT_REGRESSION


def parse_grid(text: str) -> list[complex]:
    """'a:b:step' (inclusive) or a comma-separated list; empty text is an empty grid."""
    text = text.strip()
    if not text:
        return []
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"grid {text!r} must be start:stop:step")
        lo, hi, step = (float(Fraction(p)) for p in parts)
        if step <= 0:
            raise argparse.ArgumentTypeError("grid step must be positive")
        count = math.floor((hi - lo) / step + 1e-9) + 1
        return [lo + i * step for i in range(max(count, 0))]
    return [parse_complex(p) for p in text.split(",") if p.strip()]


def cmd_crosscheck(args, out) -> int:
    rows = []
    failed = False
    for z in args.z_grid:
        if not admissible(args.s, z):
            rows.append({"z": z, "status": "SKIPPED", "max_deviation": "", "note": f"|z| >= radius {radius(args.s):.15g}"})
            continue
        entry = cross_check(args.s, args.k, z, args.tol)
        failed |= entry.status != "PASS"
        row = {"z": z, "status": entry.status, "max_deviation": entry.max_deviation if entry.max_deviation is not None else ""}
        row.update(entry.values)
        row["note"] = entry.note
        rows.append(row)
    _emit_rows(rows, args.format, out)
    return EXIT_REGRESSION if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lehmer", description="Lehmer binomial series evaluation and identity checks")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_format=True):
        p.add_argument("--s", type=int, required=True, help="binomial multiplier s >= 1")
        p.add_argument("--tol", type=float, default=1e-10)
        if with_format:
            p.add_argument("--format", choices=("json", "csv", "md", "plain"), default="plain")

    p = sub.add_parser("eval", help="evaluate one series by all pipelines")
    common(p)
    p.add_argument("--k", type=int, default=0, help="weight exponent k >= 0")
    p.add_argument("--z", type=parse_complex, required=True, help="argument, e.g. 2, 1/2, 1+0.5i")
    p.add_argument("--start", type=int, choices=(0, 1), default=1)
    p.add_argument("--method", choices=("series", "integral", "rootsum", "all"), default="all")
    p.add_argument("--max-terms", type=int, default=200_000)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("roots", help="roots of 1 - z X^(s-1) + z X^s with diagnostics")
    common(p)
    p.add_argument("--z", type=parse_complex, required=True)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("identities", help="verify the bundled identity registry")
    p.add_argument("--format", choices=("json", "csv", "md", "plain"), default="plain")
    p.add_argument("--tol", type=float, default=None, help="override every record tolerance")
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--output", default=None, help="write the report to a file")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("crosscheck", help="three-pipeline agreement over a z grid")
    common(p)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--z-grid", type=parse_grid, required=True, help="start:stop:step or a,b,c")
    p.set_defaults(func=cmd_crosscheck)
    return parser


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "--z -0.5" as two options; rewrite to "--z=-0.5"
    out = []
    i = 0
    while i < len(argv):
        if argv[i] in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(sys.argv[1:] if argv is None else list(argv)))
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (LehmerError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
