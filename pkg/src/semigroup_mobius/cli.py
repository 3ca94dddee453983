"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 integer overflow (only reachable with ``--int64``).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext

from . import closed_forms as cf
from .errors import IntegerOverflow, SemigroupError
from .harness import BOUNDS, METHODS, SUITES, Target, mu_table, run_suite
from .intmath import strict_int64
from .semigroup import apery_arithmetic, apery_set, decompose

EXIT_FAIL, EXIT_USAGE, EXIT_OVERFLOW = 1, 2, 3


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _target(args) -> Target:
    if args.gens is not None and args.arith is not None:
        raise UsageError("give either --gens or --arith, not both")
    if args.arith is not None:
        if len(args.arith) != 3:
            raise UsageError("--arith takes exactly a,d,k")
        return Target.from_arithmetic(*args.arith)
    if args.gens is None:
        raise UsageError("one of --gens or --arith is required")
    return Target.from_generators(args.gens)


def _resolve_method(target: Target, method: str) -> str:
    chosen = target.auto_method() if method == "auto" else method
    if not target.applicable(chosen):
        raise UsageError(f"method {chosen!r} does not apply to {target}")
    return chosen


def _record(target: Target, method: str, x: int, mu: int) -> dict:
    rec = {"x": x, "mu": mu, "method": method}
    if method == "even":
        rec["rep"] = decompose(target.arithmetic, x).as_list()
    return rec


def _csv_line(rec: dict) -> str:
    return f"{rec['x']},{rec['mu']},{rec['method']}"


def _range_chunk(args: tuple) -> list[int]:
    target, method, lo, hi, strict = args
    with strict_int64(strict):
        f = target.evaluator(method)
        return [f(x) for x in range(lo, hi + 1)]


def cmd_compute(args, out) -> int:
    target = _target(args)
    method = _resolve_method(target, args.method)
    rec = _record(target, method, args.x, target.evaluator(method)(args.x))
    if args.format == "csv":
        out.write("x,mu,method\n" + _csv_line(rec) + "\n")
    else:
        out.write(json.dumps(rec) + "\n")
    return 0


def cmd_range(args, out) -> int:
    if args.lo > args.hi:
        raise UsageError(f"--from {args.lo} exceeds --to {args.hi}")
    target = _target(args)
    method = _resolve_method(target, args.method)
    xs = list(range(args.lo, args.hi + 1))
    if args.jobs > 1 and len(xs) > 1:
        size = -(-len(xs) // args.jobs)
        chunks = [
            (target, method, lo, min(lo + size - 1, args.hi), args.int64)
            for lo in range(args.lo, args.hi + 1, size)
        ]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            values = [v for part in pool.map(_range_chunk, chunks) for v in part]
    else:
        values = _range_chunk((target, method, args.lo, args.hi, args.int64))
    records = [_record(target, method, x, mu) for x, mu in zip(xs, values)]
    if args.format == "json":
        out.write(json.dumps(records) + "\n")
    else:
        out.write("x,mu,method\n")
        out.writelines(_csv_line(r) + "\n" for r in records)
    return 0


def cmd_table(args, out) -> int:
    if args.rows < 1:
        raise UsageError("--rows must be positive")
    table = mu_table(cf.EvenCaseParams(args.q, args.d), args.rows - 1)
    out.write(table.to_csv() if args.format == "csv" else table.to_text())
    return 0


def cmd_apery(args, out) -> int:
    target = _target(args)
    S, A = target.semigroup, target.arithmetic
    m = args.mod if args.mod is not None else S.multiplicity
    elements = apery_set(S, m)
    roberts = None
    if A is not None and m == A.a:
        roberts = list(enumerate(apery_arithmetic(A)))
    if args.format == "json":
        doc = {"modulus": m, "elements": elements}
        if roberts is not None:
            doc["roberts"] = [[i, v] for i, v in roberts]
        out.write(json.dumps(doc) + "\n")
    else:
        out.writelines(f"{v}\n" for v in elements)
        if roberts is not None:
            out.write("# i,ceil(i/k)*a+i*d\n")
            out.writelines(f"{i},{v}\n" for i, v in roberts)
    return 0


def cmd_check(args, out) -> int:
    results = run_suite(args.suite, args.bound, args.jobs, args.int64)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        out.write(f"{status} {r.name}: {r.checks} checks, {len(r.failures)} failures\n")
        for note in r.notes:
            out.write(f"  note: {note}\n")
        for failure in r.failures:
            out.write(f"  diff: {failure}\n")
    return 0 if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semigroup-mobius",
        description="Möbius function of the poset (Z, <=_S) of a numerical semigroup S.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--int64", action="store_true",
        help="enforce signed 64-bit results; exit 3 on overflow",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def semigroup_flags(p):
        p.add_argument("--gens", type=_ints, help="generators, e.g. 3,4,5")
        p.add_argument("--arith", type=_ints, metavar="A,D,K", help="<a, a+d, ..., a+kd>")

    methods = ("auto",) + METHODS

    p = sub.add_parser("compute", parents=[common], help="mu_S at one integer")
    semigroup_flags(p)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--method", choices=methods, default="auto")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("range", parents=[common], help="mu_S over an inclusive range")
    semigroup_flags(p)
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--method", choices=methods, default="auto")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_range)

    p = sub.add_parser("table", parents=[common], help="mu_S([x0,0,x2]) for <2q, 2q+d, 2q+2d>")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--rows", type=int, default=16)
    p.add_argument("--format", choices=("csv", "text"), default="csv")
    p.add_argument("--jobs", type=int, default=1, help="accepted for symmetry; tables are cheap")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("apery", parents=[common], help="Apéry set with respect to an element of S")
    semigroup_flags(p)
    p.add_argument("--mod", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_apery)

    p = sub.add_parser("check", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    p.add_argument("--bound", choices=tuple(BOUNDS), default="full")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    ctx = strict_int64() if args.int64 else nullcontext()
    try:
        with ctx:
            return args.func(args, out)
    except IntegerOverflow as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (UsageError, SemigroupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
