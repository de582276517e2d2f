"""Command-line driver.

Subcommands:
  stats      one JSON report for a family spec at its configured n
  sweep      CSV report over an ascending n-grid, optional chart file
  decompose  the exact window decomposition at one (m, v)

Exit codes: 0 ok, 2 usage/spec error, 3 support overflow.
"""

from __future__ import annotations

import argparse
import json
import sys

from .convolve import SupportOverflowError
from .families import FamilySpec, sum_law
from .limit_laws import get_law
from .pmf import mean_and_std
from .stats import full_report, proof_decomposition

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3

SWEEP_BASE_COLUMNS = (
    "n", "a", "b", "eps", "v", "window_diff", "shift_diff", "llt_err",
    "b_window_diff", "b_llt_err",
)


def _parse_int_list(text: str, name: str) -> list[int]:
    try:
        items = [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise ValueError("%s: expected a comma-separated integer list" % name)
    return items


def _load_spec(path: str) -> FamilySpec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValueError("spec: cannot read %s (%s)" % (path, exc))
    return FamilySpec.from_json(text)


def _fmt(x) -> str:
    # repr of a float is the shortest decimal that round-trips the bits
    return repr(x) if isinstance(x, float) else str(x)


def _report_row(report) -> dict:
    row = {
        "n": report.n,
        "a": report.a,
        "b": report.b,
        "eps": report.eps,
        "v": report.v,
        "window_diff": report.window_diff,
        "shift_diff": report.shift_diff,
        "llt_err": report.llt_err,
        "b_window_diff": report.scaled_window_diff,
        "b_llt_err": report.scaled_llt_err,
    }
    for d, x in report.mod_dev.items():
        row["mod_dev_%d" % d] = x
    return row


def cmd_stats(args) -> int:
    spec = _load_spec(args.spec)
    law = get_law(args.law)
    moduli = _parse_int_list(args.mod, "--mod") if args.mod else []
    report = full_report(sum_law(spec), law, moduli, n=spec.n)
    payload = report.to_dict()
    if args.json:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(json.dumps(payload, indent=2))
    return EXIT_OK


def cmd_sweep(args) -> int:
    spec = _load_spec(args.spec)
    ns = _parse_int_list(args.n, "--n")
    if not ns:
        raise ValueError("--n: list must be nonempty")
    if any(b <= a for a, b in zip(ns, ns[1:])) or any(n < 1 for n in ns):
        raise ValueError("--n: list must be ascending positive integers")
    law = get_law(args.law)
    moduli = _parse_int_list(args.mod, "--mod") if args.mod else []

    rows = []
    for n in ns:
        point = FamilySpec(spec.kind, spec.params, n)
        rows.append(_report_row(full_report(sum_law(point), law, moduli, n=n)))

    columns = list(SWEEP_BASE_COLUMNS) + ["mod_dev_%d" % d for d in moduli]
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(",".join(columns) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(row[c]) for c in columns) + "\n")

    if args.plot:
        from .plotting import render_sweep_chart

        render_sweep_chart(rows, args.plot)
    return EXIT_OK


def cmd_decompose(args) -> int:
    spec = _load_spec(args.spec)
    law = get_law(args.law)
    if args.v < 1:
        raise ValueError("--v: must be >= 1")
    p = sum_law(spec)
    dec = proof_decomposition(p, mean_and_std(p), law, args.m, args.v)
    print(json.dumps(dec.to_dict(), indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="llt",
        description="Exact lattice-sum statistics for local limit theorem "
        "diagnostics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("stats", help="single-shot JSON report")
    p_stats.add_argument("--spec", required=True, help="family spec JSON file")
    p_stats.add_argument("--law", default="normal", help="limit law name")
    p_stats.add_argument("--mod", default="", help="comma-separated moduli")
    p_stats.add_argument("--json", action="store_true",
                         help="compact single-line JSON")
    p_stats.set_defaults(func=cmd_stats)

    p_sweep = sub.add_parser("sweep", help="CSV report over an n-grid")
    p_sweep.add_argument("--spec", required=True, help="family spec JSON file")
    p_sweep.add_argument("--n", required=True,
                         help="ascending comma-separated n values")
    p_sweep.add_argument("--out", required=True, help="output CSV path")
    p_sweep.add_argument("--plot", default=None,
                         help="optional chart file (svg/png/pdf)")
    p_sweep.add_argument("--law", default="normal", help="limit law name")
    p_sweep.add_argument("--mod", default="2,3", help="comma-separated moduli")
    p_sweep.set_defaults(func=cmd_sweep)

    p_dec = sub.add_parser("decompose", help="window decomposition JSON")
    p_dec.add_argument("--spec", required=True, help="family spec JSON file")
    p_dec.add_argument("--m", required=True, type=int, help="window start")
    p_dec.add_argument("--v", required=True, type=int, help="window length")
    p_dec.add_argument("--law", default="normal", help="limit law name")
    p_dec.set_defaults(func=cmd_decompose)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize anything else
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except SupportOverflowError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    raise SystemExit(main())
