"""Command-line surface: certified pi reports, verification suites, circuit
and trig tabulation.

Exit codes: 0 success, 1 a verification suite found a certain violation,
2 argument error, 3 inconclusive (interval overlap persisting at the
precision cap).  Reports are deterministic for identical argv and seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Optional

from .circuits import circuit_measures, random_circuit
from .dyadic import Dyadic
from .errors import ArchpiError, BisectionStall, IterationCapExceeded
from .interval import Interval
from .polygons import RegularScheme, iter_scheme_measures, pi_digits, scheme_measures
from .rational import coprime_pairs, realize_rational, normalized_length, winding_count
from .suites import SUITES, run_suite
from .trig import sandwich_report

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def _default_precision() -> int:
    return _env_int("ARCHPI_PRECISION", 64)


def _default_jobs() -> int:
    return _env_int("ARCHPI_JOBS", 1)


def _emit(report: dict, fmt: str, output: Optional[str]) -> None:
    if fmt == "json":
        text = json.dumps(report, indent=2, default=str) + "\n"
    elif fmt == "csv":
        rows = report.get("rows") or [report.get("result", report)]
        if rows and not isinstance(rows, list):
            rows = [rows]
        buf = io.StringIO()
        fieldnames = sorted({key for row in rows for key in row})
        writer = csv.DictWriter(buf, fieldnames=fieldnames)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v
                             for k, v in row.items()})
        text = buf.getvalue()
    else:
        lines = [f"command: {report.get('command', '?')}"]
        for key, value in report.items():
            if key in ("command", "rows"):
                continue
            lines.append(f"{key}: {json.dumps(value, default=str)}")
        for row in report.get("rows", []):
            lines.append(json.dumps(row, default=str))
        text = "\n".join(lines) + "\n"
    if output:
        with open(output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--precision", type=int, default=None,
                        help="working precision in bits")
    parser.add_argument("--format", choices=("json", "csv", "text"),
                        default="json")
    parser.add_argument("--output", default=None, help="write report to file")


def _precision(args, floor: int = 16) -> int:
    prec = args.precision if args.precision is not None else _default_precision()
    if prec < floor:
        raise SystemExit(EXIT_USAGE)
    return prec


def _cmd_bounds(args) -> int:
    prec = _precision(args)
    measures = scheme_measures(RegularScheme(args.n, args.m), prec)
    pi_lo = (measures.p / 2).lo
    pi_hi = (measures.P / 2).hi
    report = {
        "command": "bounds",
        "n": args.n,
        "m": args.m,
        "precision": prec,
        "edge_count": measures.scheme.edge_count,
        "pi_lo": pi_lo.decimal(30, up=False),
        "pi_hi": pi_hi.decimal(30, up=True),
        "rows": [measures.report_row()],
    }
    _emit(report, args.format, args.output)
    return EXIT_OK


def _cmd_digits(args) -> int:
    digits = pi_digits(args.count)
    report = {"command": "digits", "count": args.count, "digits": digits}
    if args.format == "text":
        text = digits + "\n"
        if args.output:
            with open(args.output, "w") as handle:
                handle.write(text)
        else:
            sys.stdout.write(text)
    else:
        _emit(report, args.format, args.output)
    return EXIT_OK


def _cmd_archimedes(args) -> int:
    prec = _precision(args)
    rows = [
        meas.report_row()
        for meas in iter_scheme_measures(args.n, args.m_max, prec)
    ]
    report = {
        "command": "archimedes",
        "n": args.n,
        "m_max": args.m_max,
        "precision": prec,
        "rows": rows,
    }
    _emit(report, args.format, args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    prec = args.precision  # suites pick their own default when None
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    kwargs = {
        "precision": prec,
        "seed": args.seed,
        "jobs": jobs,
        "samples": args.samples,
        "m_max": args.m_max,
        "max_n": args.max_n,
        "circuits_per_cap": args.circuits_per_cap,
        "k_max": args.k_max,
    }
    result = run_suite(args.suite, **kwargs)
    report = {
        "command": "verify",
        "suite": result.suite,
        "seed": args.seed,
        "samples": result.samples,
        "violations": result.violations,
        "inconclusive": result.inconclusive,
        "rows": result.rows,
    }
    _emit(report, args.format, args.output)
    if result.violations:
        return EXIT_VIOLATED
    if result.inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_circuit(args) -> int:
    prec = _precision(args)
    cap = Interval.exact(Dyadic(1, -args.mesh_cap_exp), prec)
    circuit = random_circuit(args.points, cap, args.seed, prec)
    measures = circuit_measures(circuit)
    report = {
        "command": "circuit",
        "seed": args.seed,
        "points": len(circuit),
        "mesh_cap_exp": args.mesh_cap_exp,
        "precision": prec,
        "measures": measures.serialize(),
    }
    if args.include_points:
        report["vertices"] = [p.serialize() for p in circuit.vertices]
    _emit(report, args.format, args.output)
    return EXIT_OK


def _cmd_trig(args) -> int:
    prec = _precision(args, floor=32)
    rows = []
    if args.theta is not None:
        thetas = [Interval.from_fraction(Fraction(args.theta), prec)]
        labels = [args.theta]
    else:
        thetas = [Interval.exact(Dyadic(1, -k), prec) for k in
                  range(1, args.k_max + 1)]
        labels = [f"2^-{k}" for k in range(1, args.k_max + 1)]
    for label, theta in zip(labels, thetas):
        row = {"theta": label}
        row.update(sandwich_report(theta, prec).serialize())
        rows.append(row)
    report = {
        "command": "trig",
        "precision": prec,
        "rows": rows,
    }
    _emit(report, args.format, args.output)
    return EXIT_OK


def _cmd_sweep_rational(args) -> int:
    prec = _precision(args)
    rows = []
    for k, N in coprime_pairs(args.max_n):
        r = realize_rational(k, N, prec)
        rows.append(
            {
                "k": k,
                "N": N,
                "chord": list(r.chord.decimal_pair(17)),
                "inscribed": list(normalized_length(r).decimal_pair(17)),
                "circumscribed": list(
                    normalized_length(r, "circumscribed").decimal_pair(17)
                ),
                "winding": winding_count(r),
            }
        )
    report = {
        "command": "sweep-rational",
        "max_n": args.max_n,
        "precision": prec,
        "rows": rows,
    }
    _emit(report, args.format, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="archpi",
        description="Certified pi enclosures and polygon-geometry verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="pi bracket from one polygon scheme")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("digits", help="certified decimal digits of pi")
    p.add_argument("--count", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_digits)

    p = sub.add_parser("archimedes", help="refinement table for one base polygon")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--m-max", type=int, default=10)
    _add_common(p)
    p.set_defaults(func=_cmd_archimedes)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--circuits-per-cap", type=int, default=None)
    p.add_argument("--k-max", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("circuit", help="generate and measure a random circuit")
    p.add_argument("--points", type=int, default=3)
    p.add_argument("--mesh-cap-exp", type=int, default=2,
                   help="mesh cap 2^-k for this exponent k")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--include-points", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_circuit)

    p = sub.add_parser("trig", help="certified sine/cosine sandwich table")
    p.add_argument("--theta", default=None,
                   help="arclength as a fraction, e.g. 1/8 or 0.125")
    p.add_argument("--k-max", type=int, default=16,
                   help="tabulate theta = 2^-k for k = 1..k-max")
    _add_common(p)
    p.set_defaults(func=_cmd_trig)

    p = sub.add_parser("sweep-rational", help="winding chord sweep")
    p.add_argument("--max-n", type=int, default=24)
    _add_common(p)
    p.set_defaults(func=_cmd_sweep_rational)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BisectionStall, IterationCapExceeded) as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (ArchpiError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
