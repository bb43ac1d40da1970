"""Command-line front end.

    zetakit zeta       --s 2+0i --series hasse [--trace]
    zetakit polylog    --s 2 --x -1
    zetakit zee        --s 0.5+3i --x-grid 0.1:0.9:9
    zetakit ratio-scan --s0 0.5+14.134725141734693i --k-range 2:8
    zetakit compare    --s 2 --terms 60

Exit codes: 0 success, 2 usage, 3 math domain, 4 non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Sequence

from . import param_zeta, zero_lab, zeta_engine
from .polylog import polylog as _li, select_method
from .errors import DomainError, NonConvergenceError, ZetaKitError

__all__ = ["EXIT_DOMAIN", "EXIT_NONCONVERGENCE", "EXIT_OK", "EXIT_USAGE", "SCHEMA_VERSION", "format_complex", "main", "parse_complex"]

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_NONCONVERGENCE = 0, 2, 3, 4
MAX_K = 12

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(
    rf"^\s*(?:(?P<re>[+-]?{_NUM})(?:(?P<isign>[+-])(?P<im>{_NUM})?[ij])?"
    rf"|(?P<pure>[+-]?{_NUM})?[ij]|(?P<only>[+-])[ij])\s*$"
)


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """Parse "a", "a+bi", "a-bi", "bi" (i or j, exponents allowed)."""
    m = _COMPLEX_RE.match(text)
    if not m:
        raise UsageError(f"not a complex literal: {text!r}")
    if m.group("only"):
        return complex(0.0, -1.0 if m.group("only") == "-" else 1.0)
    if m.group("re") is None:
        pure = m.group("pure")
        if pure in (None, "+", "-"):
            pure = (pure or "") + "1"
        return complex(0.0, float(pure))
    re_part = float(m.group("re"))
    if m.group("isign") is None:
        return complex(re_part, 0.0)
    im = float(m.group("im")) if m.group("im") else 1.0
    return complex(re_part, -im if m.group("isign") == "-" else im)


def format_complex(z: complex) -> str:
    """Canonical literal accepted by parse_complex."""
    return f"{_fmt(z.real)}{'-' if math.copysign(1.0, z.imag) < 0 else '+'}{_fmt(abs(z.imag))}i"


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _range_arg(text: str) -> tuple:
    parts = text.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected kmin:kmax")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise argparse.ArgumentTypeError("k-range bounds must be integers") from exc
    if not 1 <= lo <= hi:
        raise argparse.ArgumentTypeError("need 1 <= kmin <= kmax")
    if hi > MAX_K:
        raise argparse.ArgumentTypeError(f"k above {MAX_K} is refused")
    return lo, hi


def _grid_arg(text: str) -> List[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected start:stop:count")
    try:
        a, b, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise argparse.ArgumentTypeError("bad grid specification") from exc
    if n < 1:
        raise argparse.ArgumentTypeError("grid count must be positive")
    if n == 1:
        return [a]
    return [a + (b - a) * i / (n - 1) for i in range(n)]


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError("expected an integer") from exc
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _nonneg_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError("expected a number") from exc
    if not v >= 0:
        raise argparse.ArgumentTypeError("expected a nonnegative number")
    return v


# ---------------------------------------------------------------- serialization


def _fmt(v: float) -> str:
    return format(v, ".17g")


def _json_number(v: float) -> Optional[float]:
    return None if not math.isfinite(v) else v


def _json_value(v: Any) -> Any:
    if isinstance(v, complex):
        return {"re": _json_number(v.real), "im": _json_number(v.imag)}
    if isinstance(v, float):
        return _json_number(v)
    return v


def _csv_columns(rows: Sequence[Dict[str, Any]]) -> List[str]:
    cols: List[str] = []
    for row in rows:
        for key, val in row.items():
            names = [f"{key}_re", f"{key}_im"] if isinstance(val, complex) else [key]
            for n in names:
                if n not in cols:
                    cols.append(n)
    return cols


def _csv_cells(row: Dict[str, Any]) -> Dict[str, str]:
    out = {}
    for key, val in row.items():
        if isinstance(val, complex):
            out[f"{key}_re"], out[f"{key}_im"] = _fmt(val.real), _fmt(val.imag)
        elif isinstance(val, float):
            out[key] = _fmt(val)
        elif val is None:
            out[key] = ""
        else:
            out[key] = str(val)
    return out


def make_record(command: str, inputs: Dict[str, Any], rows: List[Dict[str, Any]], summary=None) -> Dict[str, Any]:
    rec = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": {k: format_complex(v) if isinstance(v, complex) else str(v) for k, v in inputs.items()},
        "rows": [{k: _json_value(v) for k, v in row.items()} for row in rows],
    }
    if summary is not None:
        rec["summary"] = {k: _json_value(v) for k, v in summary.items()}
    return rec


def render(records: List[Dict[str, Any]], raw_rows: List[List[Dict[str, Any]]], fmt: str) -> str:
    if fmt == "json":
        body = records[0] if len(records) == 1 else records
        return json.dumps(body, indent=1, allow_nan=False) + "\n"
    flat: List[Dict[str, Any]] = [r for rows in raw_rows for r in rows]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_csv_columns(flat), lineterminator="\n")
    writer.writeheader()
    for r in flat:
        writer.writerow(_csv_cells(r))
    return buf.getvalue()


# ---------------------------------------------------------------- commands


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("ZETAKIT_THREADS", "1")))
    except ValueError:
        return 1


def _ordered_map(fn, items):
    n = _threads()
    if n == 1 or len(items) < 2:
        return [fn(i) for i in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _trace_rows(trace: zeta_engine.PartialSumTrace, kind_column: bool = False) -> List[Dict[str, Any]]:
    rows = []
    for r in trace.rows:
        row: Dict[str, Any] = {}
        if kind_column:
            row["kind"] = trace.kind
        row.update(
            n=r.n,
            term=r.term,
            partial=r.partial,
            abs_term=abs(r.term),
            predicted=r.predicted_term_magnitude,
            ratio=r.ratio,
        )
        rows.append(row)
    return rows


def cmd_zeta(args) -> tuple:
    spec = zeta_engine.SeriesSpec(args.series, args.terms, args.term_mode, args.tol, tail=not args.no_tail)
    value, trace = zeta_engine.zeta_via_series(args.s, spec)
    inputs = {"s": args.s, "series": args.series, "terms": args.terms, "term_mode": args.term_mode, "tol": args.tol}
    summary = {"value": value, "tail": trace.tail, "tail_error": trace.tail_error, "terms_used": len(trace.rows)}
    if args.trace:
        rows = _trace_rows(trace)
    else:
        rows = [{"s": args.s, "series": args.series, "value": value, "tail_error": trace.tail_error}]
    return [make_record("zeta", inputs, rows, summary)], [rows]


def cmd_polylog(args) -> tuple:
    method = select_method(args.s, args.x) if args.method == "auto" else args.method
    value = _li(args.s, args.x, method=method)
    rows = [{"s": args.s, "x": args.x, "value": value, "method": method}]
    return [make_record("polylog", {"s": args.s, "x": args.x, "method": args.method}, rows)], [rows]


def _zee_row(s: complex, x: complex, method: str, terms: int) -> Dict[str, Any]:
    used = method
    err: Optional[float] = None
    if method == "auto":
        if s.imag == 0 and s.real == math.floor(s.real) and -8 <= s.real <= 2:
            used = "closed_form"
        elif abs(x) <= 0.5:
            used = "series"
        else:
            used = "integral"
    if used == "series":
        value, err = param_zeta.z_series(s, x, terms)
    else:
        value = param_zeta.z_value(s, x, used, terms)
        if used == "closed_form":
            err = 0.0
    return {"x": x, "z": value, "method": used, "error_estimate": err}


def cmd_zee(args) -> tuple:
    if args.x_grid is not None:
        xs = [complex(v) for v in args.x_grid]
    else:
        xs = [args.x]
    rows = _ordered_map(lambda x: _zee_row(args.s, x, args.method, args.terms), xs)
    inputs = {"s": args.s, "method": args.method, "terms": args.terms}
    inputs["x" if args.x_grid is None else "x_grid"] = args.x_grid_text or args.x
    return [make_record("zee", inputs, rows)], [rows]


def cmd_ratio_scan(args) -> tuple:
    lo, hi = args.k_range
    xs = zero_lab.default_scan_points(lo, hi)
    scan = zero_lab.ratio_scan(args.s0, xs)
    rows = [
        {
            "k": k,
            "x": r.x,
            "num_abs": r.num_abs,
            "den_abs": r.den_abs,
            "ratio": r.ratio,
            "predicted_factor": r.predicted_factor,
            "target": r.target,
        }
        for k, r in zip(range(lo, hi + 1), scan)
    ]
    return [make_record("ratio-scan", {"s0": args.s0, "k_range": f"{lo}:{hi}"}, rows)], [rows]


def cmd_compare(args) -> tuple:
    s = args.s

    def one(kind):
        spec = zeta_engine.SeriesSpec(kind, args.terms, args.term_mode)
        return zeta_engine.convergence_report(s, spec)

    traces = _ordered_map(one, list(zeta_engine.SERIES_KINDS))
    records, raw = [], []
    for tr in traces:
        rows = _trace_rows(tr, kind_column=True)
        inputs = {"s": s, "series": tr.kind, "terms": args.terms, "term_mode": args.term_mode}
        records.append(make_record("compare", inputs, rows))
        raw.append(rows)
    return records, raw


# ---------------------------------------------------------------- parser


def _read_config(path: str) -> Dict[str, str]:
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    for num, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{num}: expected key=value")
        key, val = (p.strip() for p in line.split("=", 1))
        out[key.replace("-", "_")] = val
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--config", help="key=value file presetting any option")

    p = argparse.ArgumentParser(prog="zetakit", description="Zeta series, polylogarithms and zero experiments.")
    sub = p.add_subparsers(dest="command", required=True)

    z = sub.add_parser("zeta", parents=[common], help="zeta(s) from one of the five series")
    z.add_argument("--s", type=_complex_arg, required=True)
    z.add_argument("--series", choices=zeta_engine.SERIES_KINDS, default="this_paper")
    z.add_argument("--terms", type=_positive_int, default=zeta_engine.N_SWITCH)
    z.add_argument("--term-mode", choices=("direct", "integral", "auto"), default="auto")
    z.add_argument("--tol", type=_nonneg_float, default=0.0, help="early-stop threshold on |term|")
    z.add_argument("--no-tail", action="store_true", help="return the bare partial sum")
    z.add_argument("--trace", action="store_true")
    z.set_defaults(func=cmd_zeta)

    pl = sub.add_parser("polylog", parents=[common], help="principal-branch Li_s(x)")
    pl.add_argument("--s", type=_complex_arg, required=True)
    pl.add_argument("--x", type=_complex_arg, required=True)
    pl.add_argument("--method", choices=("auto", "power_series", "appell_integral", "inversion", "closed_form"), default="auto")
    pl.set_defaults(func=cmd_polylog)

    ze = sub.add_parser("zee", parents=[common], help="the parametrized zeta Z(s, x)")
    ze.add_argument("--s", type=_complex_arg, required=True)
    g = ze.add_mutually_exclusive_group(required=True)
    g.add_argument("--x", type=_complex_arg)
    g.add_argument("--x-grid", dest="x_grid_text", metavar="START:STOP:COUNT")
    ze.add_argument("--method", choices=("auto", "series", "integral", "closed_form"), default="auto")
    ze.add_argument("--terms", type=_positive_int, default=200)
    ze.set_defaults(func=cmd_zee)

    r = sub.add_parser("ratio-scan", parents=[common], help="tail ratio at s0 and 1-s0 along x = 1 - 10^-k")
    r.add_argument("--s0", type=_complex_arg, required=True)
    r.add_argument("--k-range", type=_range_arg, default=(2, 8))
    r.set_defaults(func=cmd_ratio_scan)

    c = sub.add_parser("compare", parents=[common], help="term magnitudes of all five series against predictions")
    c.add_argument("--s", type=_complex_arg, required=True)
    c.add_argument("--terms", type=_positive_int, default=60)
    c.add_argument("--term-mode", choices=("direct", "integral", "auto"), default="auto")
    c.set_defaults(func=cmd_compare)
    return p


def _apply_config(parser: argparse.ArgumentParser, argv: List[str]) -> List[str]:
    # a --config file supplies defaults; explicit flags still win
    if "--config" not in argv and not any(a.startswith("--config=") for a in argv):
        return argv
    probe = argparse.ArgumentParser(add_help=False)
    probe.add_argument("--config")
    known, _ = probe.parse_known_args(argv)
    settings = _read_config(known.config)
    present = {a.split("=", 1)[0] for a in argv if a.startswith("--")}
    extra: List[str] = []
    for key, val in settings.items():
        flag = "--" + key.replace("_", "-")
        if flag in present:
            continue
        if val.lower() in ("true", "yes", "on"):
            extra.append(flag)
        elif val.lower() in ("false", "no", "off"):
            continue
        else:
            extra.append(f"{flag}={val}")
    return argv + extra


_VALUE_FLAGS = ("--s", "--x", "--s0", "--x-grid", "--k-range", "--tol")


def _glue_negative_values(argv: List[str]) -> List[str]:
    # "--x -1+0i" would otherwise read -1+0i as an option
    out: List[str] = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") and not argv[i + 1].startswith("--"):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        argv = _apply_config(parser, argv)
        args = parser.parse_args(argv)
        if getattr(args, "command", None) == "zee" and args.x_grid_text is not None:
            try:
                args.x_grid = _grid_arg(args.x_grid_text)
            except argparse.ArgumentTypeError as exc:
                raise UsageError(str(exc)) from exc
        elif getattr(args, "command", None) == "zee":
            args.x_grid = None
            args.x_grid_text = None
    except UsageError as exc:
        print(f"zetakit: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        records, raw = args.func(args)
    except NonConvergenceError as exc:
        print(f"zetakit: no convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except (DomainError, ZetaKitError, ValueError, OverflowError, ZeroDivisionError) as exc:
        print(f"zetakit: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(render(records, raw, args.format))
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
