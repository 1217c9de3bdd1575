"""Command-line entry point: ``ngon-coloring {count,verify,solve,bench}``.

Exit codes: 0 success, 2 invalid arguments, 3 unsupported instance,
4 internal inconsistency (strategies disagree, or a closed form fails to
cancel to an integer).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bench, counting, recurrence
from .counting import ALL_STRATEGIES, DEFAULT_CAP, CycleInstance, StrategyId
from .errors import (
    DegenerateSystem,
    DomainError,
    NonIntegerResult,
    NonIntegerRoots,
    OracleTooLarge,
)
from .modmath import Modulus

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_INCONSISTENT = 4

STRATEGY_NAMES = [s.value for s in StrategyId]


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {value}")
    return value


def _modulus(text: str) -> Modulus:
    try:
        return Modulus(_natural(text))
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError("list must not be empty")
    return [_natural(t) for t in items]


def _strategy_list(text: str) -> list[StrategyId]:
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError("strategy list must not be empty")
    try:
        return [StrategyId(t) for t in items]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown strategy in {text!r}; choose from {', '.join(STRATEGY_NAMES)}"
        ) from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ngon-coloring",
        description="Count proper k-colorings of an n-cycle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count colorings for one (n, k)")
    p.add_argument("--n", type=_natural, required=True)
    p.add_argument("--k", type=_natural, required=True)
    p.add_argument("--mod", type=_modulus, help="report the count modulo M (M < 2**31)")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--strategy", choices=STRATEGY_NAMES, default="closed-form")
    which.add_argument("--all-strategies", action="store_true")
    p.add_argument("--cap", type=_natural, default=DEFAULT_CAP, help="brute-force assignment cap")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="differential check of all strategies against brute force")
    p.add_argument("--max-n", type=_natural, required=True)
    p.add_argument("--max-k", type=_natural, required=True)
    p.add_argument("--cap", type=_natural, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="solve x[n+2] = p x[n+1] + q x[n] in closed form")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--a", type=int, required=True, help="x[start-index]")
    p.add_argument("--b", type=int, required=True, help="x[start-index + 1]")
    p.add_argument("--start-index", type=_natural, default=1)
    p.add_argument("--eval", type=_natural, metavar="N", help="also print x[N]")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="time strategies in modular mode")
    grid = p.add_mutually_exclusive_group(required=True)
    grid.add_argument("--n-list", type=_int_list)
    grid.add_argument("--paper-table", action="store_true", help="the 14-row grid at M=10679")
    p.add_argument("--k-list", type=_int_list)
    p.add_argument("--mod", type=_modulus, default=Modulus(bench.PAPER_MODULUS))
    p.add_argument("--strategies", type=_strategy_list)
    p.add_argument("--repeats", type=_natural, default=5)
    p.add_argument("--warmups", type=_natural, default=1)
    p.add_argument("--recurrence-max-n", type=_natural, default=bench.PAPER_RECURRENCE_MAX_N,
                   help="paper table: largest n on which linear-time strategies run")
    p.add_argument("--all-rows", action="store_true",
                   help="paper table: run linear-time strategies on every row")
    p.add_argument("--format", choices=["md", "markdown", "csv", "json"], default="markdown")
    p.set_defaults(func=cmd_bench)
    return parser


def _value_text(value) -> str:
    return str(int(value))


def _outcome_record(inst: CycleInstance, mod: Modulus | None, outcome) -> dict:
    return {
        "n": inst.n,
        "k": inst.k,
        "modulus": None if mod is None else mod.value,
        "strategy": str(outcome.strategy),
        "value": int(outcome.value),
        "elapsed_ms": round(outcome.elapsed_ms, 3),
    }


def cmd_count(args: argparse.Namespace) -> int:
    try:
        inst = CycleInstance(args.n, args.k)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if not args.all_strategies:
        try:
            outcome = counting.count(inst, args.mod, args.strategy, args.cap)
        except OracleTooLarge as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_UNSUPPORTED
        if args.json:
            print(json.dumps(_outcome_record(inst, args.mod, outcome)))
        else:
            print(_value_text(outcome.value))
        return EXIT_OK

    outcomes = []
    for s in ALL_STRATEGIES:
        try:
            outcomes.append(counting.count(inst, args.mod, s, args.cap))
        except OracleTooLarge:
            print(f"{s}: skipped (k**n exceeds cap {args.cap})", file=sys.stderr)
    if args.json:
        print(json.dumps([_outcome_record(inst, args.mod, o) for o in outcomes]))
    else:
        for o in outcomes:
            print(f"{o.strategy} {_value_text(o.value)}")
    if len({int(o.value) for o in outcomes}) > 1:
        print("error: strategies disagree", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        report = counting.verify_all(args.max_n, args.max_k, args.cap)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(
        f"{report.checked} checked, {len(report.skipped)} skipped, "
        f"{len(report.mismatches)} mismatches"
    )
    for m in report.mismatches:
        print(f"mismatch n={m.n} k={m.k} {m.strategy}: {m.value} != {m.expected}")
    return EXIT_OK if report.ok else EXIT_INCONSISTENT


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        rec = recurrence.Order2Recurrence(args.p, args.q, args.a, args.b, args.start_index)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        sol = recurrence.solve_order2(rec)
    except (NonIntegerRoots, DegenerateSystem) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED

    if isinstance(sol, recurrence.DistinctRoots):
        print(f"r1={sol.r1} r2={sol.r2} C1={sol.c1} C2={sol.c2}")
    else:
        print(f"r={sol.r} (repeated) C1={sol.c1} C2={sol.c2}")

    if args.eval is not None:
        try:
            value = recurrence.evaluate_solution(sol, args.eval)
        except DomainError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        except NonIntegerResult as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INCONSISTENT
        print(f"x[{args.eval}]={value}")
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    fmt = "markdown" if args.format == "md" else args.format
    try:
        if args.paper_table:
            report = bench.paper_table(
                strategies=args.strategies,
                recurrence_max_n=None if args.all_rows else args.recurrence_max_n,
                repeats=args.repeats,
                warmups=args.warmups,
                modulus=args.mod,
            )
        else:
            if args.k_list is None:
                print("error: --k-list is required with --n-list", file=sys.stderr)
                return EXIT_USAGE
            config = bench.BenchConfig(
                n_values=args.n_list,
                k_values=args.k_list,
                modulus=args.mod,
                strategies=args.strategies or counting.ANALYTIC_STRATEGIES,
                repeats=args.repeats,
                warmups=args.warmups,
                format=fmt,
            )
            report = bench.run_bench(config)
    except OracleTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    sys.stdout.write(bench.render_report(report, fmt))
    if not report.all_agree:
        print("error: strategies disagree on at least one row", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        # exact counts routinely exceed the default 4300-digit str() limit
        sys.set_int_max_str_digits(0)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
