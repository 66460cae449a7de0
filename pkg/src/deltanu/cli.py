"""``deltanu`` command line.

Exit status: 0 success, 2 invalid input, 3 fast/naive mismatch under
``dnu --check``, 4 work budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .bounds import compute_bounds
from .core import parse_generators
from .factorization import factorizations, length_set, w_set, delta_of_element
from .fastdnu import delta_nu_record
from .periodicity import delta_nu_table, minimal_period_report
from .scan import ScanFilter, budget_work, genus_tree_scan

EXIT_INVALID = 2
EXIT_MISMATCH = 3
EXIT_BUDGET = 4


def _emit(obj, out):
    out.write(json.dumps(obj) + "\n")


def _env_budget():
    return budget_work() if os.environ.get("DELTANU_BUDGET_MS") else None


def cmd_bounds(args, out):
    S = parse_generators(args.semigroup)
    B = compute_bounds(S)
    record = {"generators": list(S.generators), **B.to_dict(),
              "lambda1_ceil": B.lambda1_ceil, "lambda2_floor": B.lambda2_floor}
    _emit(record, out)
    return 0


def cmd_dnu(args, out):
    S = parse_generators(args.semigroup)
    if args.check:
        naive = delta_nu_record(S, args.n, method="naive")
        fast = delta_nu_record(S, args.n)
        _emit({**fast.to_dict(), "naive": list(naive.delta_nu),
               "match": naive.delta_nu == fast.delta_nu}, out)
        return 0 if naive.delta_nu == fast.delta_nu else EXIT_MISMATCH
    method = "naive" if args.naive else "auto"
    _emit(delta_nu_record(S, args.n, method=method).to_dict(), out)
    return 0


def cmd_table(args, out):
    S = parse_generators(args.semigroup)
    records = delta_nu_table(S, args.to, jobs=args.jobs, max_work=_env_budget())
    records = [r for r in records if r.n >= args.start]
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "delta_nu", "method", "evaluated_elements"])
        for r in records:
            w.writerow([r.n, "|".join(map(str, r.delta_nu)), r.method, r.evaluated_elements])
    else:
        for r in records:
            _emit(r.to_dict(), out)
    return EXIT_BUDGET if records and records[-1].n < args.to else 0


def cmd_period(args, out):
    S = parse_generators(args.semigroup)
    report = minimal_period_report(S, args.to, jobs=args.jobs, max_work=_env_budget(),
                                   allow_small_window=args.allow_small_window)
    _emit(report.to_dict(), out)
    return EXIT_BUDGET if report.truncated else 0


def cmd_zset(args, out):
    S = parse_generators(args.semigroup)
    s = args.element
    _emit({
        "element": s,
        "factorizations": [list(x.coordinates) for x in factorizations(S, s)],
        "lengths": list(length_set(S, s).lengths),
        "delta": list(delta_of_element(S, s)),
    }, out)
    return 0


def cmd_wset(args, out):
    S = parse_generators(args.semigroup)
    ws = w_set(S, args.n)
    record = {"n": args.n, "count": len(ws)}
    if not args.count_only:
        record["elements"] = list(ws)
    _emit(record, out)
    return 0


def cmd_scan(args, out):
    flt = ScanFilter(max_genus=args.max_genus,
                     skip_generalized_arithmetic=not args.keep_arithmetic,
                     require_nonconstant=args.nonconstant_only)
    for entry in genus_tree_scan(flt, jobs=args.jobs):
        _emit(entry.to_dict(), out)
        out.flush()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="deltanu", description="Delta-nu of numerical semigroups")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_semigroup(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("-s", "--semigroup", required=True, help="generators, e.g. 4,9,10,15")
        return p

    p = with_semigroup("bounds", "thresholds N_S, lambda1, lambda2, N0")
    p.set_defaults(func=cmd_bounds)

    p = with_semigroup("dnu", "Delta-nu of a single n")
    p.add_argument("-n", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--naive", action="store_true")
    g.add_argument("--fast", action="store_true", help="windowed method (default)")
    g.add_argument("--check", action="store_true", help="run both methods and compare")
    p.set_defaults(func=cmd_dnu)

    p = with_semigroup("table", "Delta-nu for a range of n")
    p.add_argument("--from", dest="start", type=int, default=0)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_table)

    p = with_semigroup("period", "eventual period and pre-period of Delta-nu")
    p.add_argument("--to", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-small-window", action="store_true")
    p.set_defaults(func=cmd_period)

    p = with_semigroup("zset", "factorizations and lengths of one element")
    p.add_argument("--element", type=int, required=True)
    p.set_defaults(func=cmd_zset)

    p = with_semigroup("wset", "elements with a factorization of length n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_wset)

    p = sub.add_parser("scan", help="walk semigroups by genus and report periods")
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--keep-arithmetic", action="store_true")
    p.add_argument("--nonconstant-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except ValueError as exc:  # includes invalid semigroups and windows
        print(f"deltanu: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
