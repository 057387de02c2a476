"""Command-line interface: hypermaps <count|table|series|verify> [flags].

Exit codes: 0 success, 1 a verification mismatch, 2 a usage or resource error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import comb

from .engine.points import count_poly, k_point, one_point
from .errors import EngineError, OracleCapError, ResourceError
from .exact.poly import Poly, format_rational
from .oracle.brute import DEFAULT_CAP, HypermapSpec, brute_count
from .verify import SUITES, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

# the engine is exact, so cost grows quickly with the degree |b|
MAX_DEGREE = 60
MAX_SERIES_TERMS = 20000


def _int_list(text: str) -> tuple:
    try:
        values = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError("expected positive integers")
    return values


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2)


def _check_degree(d: int):
    if d > MAX_DEGREE:
        raise ResourceError(f"degree {d} exceeds the limit {MAX_DEGREE}")


# ----------------------------------------------------------------- count


def cmd_count(args) -> int:
    b = args.b
    _check_degree(sum(b))
    result = count_poly(args.l, b)
    payload = result.to_json()
    by_genus = dict(result.by_genus)
    if args.genus is not None:
        by_genus = {args.genus: by_genus.get(args.genus, Fraction(0))}
        payload["by_genus"] = {str(args.genus): format_rational(by_genus[args.genus])}
    status = None
    if args.oracle:
        spec = HypermapSpec(args.l, result.b, args.genus)
        brute = brute_count(spec, cap=args.oracle_cap, jobs=args.jobs)
        status = "MATCH" if brute == by_genus else "MISMATCH"
        payload["oracle"] = {
            "status": status,
            "by_genus": {str(g): format_rational(v) for g, v in sorted(brute.items())},
        }
    if args.format == "json":
        print(_dump_json(payload))
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["g", "count"])
        for g, v in sorted(by_genus.items()):
            writer.writerow([g, format_rational(v)])
        sys.stdout.write(out.getvalue())
        if status:
            print(f"# oracle {status}")
    else:
        print(f"l={result.l} b={','.join(map(str, result.b))}")
        print(f"M(n) = {result.poly_n.format()}")
        for g, v in sorted(by_genus.items()):
            print(f"g={g}: {format_rational(v)}")
        if status:
            print(f"oracle: {status}")
    return EXIT_MISMATCH if status == "MISMATCH" else EXIT_OK


# ----------------------------------------------------------------- table


def _table_row(args):
    l, b, k, gmax = args
    result = count_poly(l, (b,) * k)
    return k, [result.by_genus.get(g, Fraction(0)) for g in range(gmax + 1)]


def cmd_table(args) -> int:
    if len(args.b) != 1:
        raise ResourceError("table takes a single face degree --b")
    b = args.b[0]
    if args.kmax < 1 or args.gmax < 0:
        raise ResourceError("need --kmax >= 1 and --gmax >= 0")
    _check_degree(b * args.kmax)
    jobs = [(args.l, b, k, args.gmax) for k in range(1, args.kmax + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_table_row, jobs))
    else:
        rows = [_table_row(j) for j in jobs]
    header = ["k"] + [f"g{g}" for g in range(args.gmax + 1)]
    if args.format == "json":
        print(_dump_json({
            "l": args.l,
            "b": b,
            "rows": [
                {"k": k, "by_genus": {str(g): format_rational(v) for g, v in enumerate(vals)}}
                for k, vals in rows
            ],
        }))
    elif args.format == "plain":
        cells = [header] + [[str(k)] + [format_rational(v) for v in vals] for k, vals in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
        for row in cells:
            print("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    else:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        for k, vals in rows:
            writer.writerow([k] + [format_rational(v) for v in vals])
        sys.stdout.write(out.getvalue())
    return EXIT_OK


# ---------------------------------------------------------------- series


def cmd_series(args) -> int:
    l, k, order = args.l, args.k, args.order
    if k < 1:
        raise ResourceError("--k must be at least 1")
    if k == 1:
        if order < l + 1:
            raise ResourceError(f"--order must be at least l+1 = {l + 1} for k=1")
        series = one_point(l, order)
        # the unstable term n/lam is part of the raw series
        terms = [((-1,), Poly.gen())] + [((e,), c) for e, c in sorted(series.items(), reverse=True)]
    else:
        if order < 2:
            raise ResourceError("--order must be at least 2 for k >= 2")
        b_max = order - 1
        size = comb(-k + k * order + k, k)
        if size > MAX_SERIES_TERMS:
            raise ResourceError(f"{size} coefficients requested; the limit is {MAX_SERIES_TERMS}")
        multi = k_point(l, k, b_max)
        terms = sorted(multi.items(), key=lambda item: tuple(-x for x in item[0]))
    if args.format == "json":
        print(_dump_json({
            "l": l,
            "k": k,
            "order": order,
            "terms": [[list(e), c.format()] for e, c in terms],
        }))
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow([f"e{i + 1}" for i in range(k)] + ["coefficient"])
        for e, c in terms:
            writer.writerow(list(e) + [c.format()])
        sys.stdout.write(out.getvalue())
    else:
        for e, c in terms:
            mono = "*".join(f"lam{i + 1}^({x})" for i, x in enumerate(e)) if k > 1 else f"lam^({e[0]})"
            print(f"{mono}: {c.format()}")
    return EXIT_OK


# ---------------------------------------------------------------- verify


def cmd_verify(args) -> int:
    options = {}
    for name in ("smax", "mmax", "bmax", "dmax", "gmax", "order", "samples", "lmax"):
        value = getattr(args, name)
        if value is not None:
            options[name] = value
    options["seed"] = args.seed
    options["jobs"] = args.jobs
    if args.suite == "duality":
        if args.l is not None:
            if not args.b or len(args.b) != 1 or args.k is None:
                raise ResourceError("duality needs --l, a single --b and --k")
            options.update(l=args.l, b=args.b[0], k=args.k)
    elif args.l is not None:
        options["lmin"] = options["lmax"] = args.l
    report = run_suite(args.suite, **options)
    if args.format == "json":
        print(_dump_json(report.to_json()))
    else:
        for line in report.lines(verbose=args.verbose):
            print(line)
    return EXIT_OK if report.passed else EXIT_MISMATCH


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypermaps",
        description="Exact counts of l-hypermaps and checks of the identities behind them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format):
        p.add_argument("--format", choices=("json", "csv", "plain"), default=default_format)
        p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
        p.add_argument("--seed", type=int, default=0, help="seed for sampled property checks")

    p = sub.add_parser("count", help="M_{g,k}(b) for one list of face degrees")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--b", type=_int_list, required=True, help="comma-separated face degrees")
    p.add_argument("--genus", type=int)
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP)
    common(p, "json")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="M_{g,k}(b,...,b) for k <= kmax, g <= gmax")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--b", type=_int_list, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--gmax", type=int, required=True)
    common(p, "csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("series", help="raw 1-point or k-point generating series")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--order", type=int, required=True, help="keep exponents >= -order")
    common(p, "json")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--l", type=int)
    p.add_argument("--b", type=_int_list)
    p.add_argument("--k", type=int)
    for name in ("lmax", "smax", "mmax", "bmax", "dmax", "gmax", "order", "samples"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("-v", "--verbose", action="store_true", help="list passing checks too")
    common(p, "plain")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "l", None) is not None and args.l < 2:
        parser.error("--l must be at least 2")
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except (OracleCapError, ResourceError) as exc:
        print(f"hypermaps: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EngineError as exc:
        print(f"hypermaps: internal check failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
