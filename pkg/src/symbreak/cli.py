"""Command line entry point: ``symbreak run|suite|canon|check``."""
from __future__ import annotations

import argparse
import sys

from .breaking import (check_double_lex, check_double_lex_col_sum, check_order_1st_row_col,
                       check_snakelex_c, check_snakelex_r)
from .canonical import DEFAULT_ROW_LIMIT, canonical_form, is_lex_leader
from .core import Matrix
from .experiments import (DEFAULT_MAX_SOLUTIONS, DEFAULT_TIME_BUDGET, load_expected,
                          run_experiment, run_suite, to_csv, to_markdown)
from .search import VarOrder

CHECKERS = {
    "doublelex": check_double_lex,
    "snakelex_r": check_snakelex_r,
    "snakelex_c": check_snakelex_c,
    "order1strowcol": check_order_1st_row_col,
    "dlexcolsum": check_double_lex_col_sum,
    "lexleader": is_lex_leader,
}


def _read_matrix(path: str) -> Matrix:
    if path == "-":
        return Matrix.from_text(sys.stdin.read())
    with open(path) as fh:
        return Matrix.from_text(fh.read())


def _limit(value: str) -> float | None:
    return None if value.lower() == "none" else float(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symbreak", description="Row and column symmetry breaking experiments.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="enumerate one instance under one configuration")
    run.add_argument("--problem", required=True,
                     help="e.g. unconstrained:r=3,c=3,d=2 or bibd:v=6,k=3,lam=4")
    run.add_argument("--sb", default="nosb", help="nosb, doublelex, snakelex_r, ...")
    run.add_argument("--value-sb", default=None,
                     help="precedence[:rowwise|colwise] or puget[:rowwise|colwise]")
    run.add_argument("--classify", action="store_true", help="count symmetry classes")
    run.add_argument("--var-order", choices=[o.value for o in VarOrder], default=None)
    run.add_argument("--time-budget", type=_limit, default=DEFAULT_TIME_BUDGET,
                     help="seconds, or 'none'")
    run.add_argument("--max-solutions", type=int, default=DEFAULT_MAX_SOLUTIONS)
    run.add_argument("--format", choices=["csv", "markdown"], default="csv")

    suite = sub.add_parser("suite", help="reproduce one results table")
    suite.add_argument("--table", type=int, required=True, choices=[1, 2, 3, 4])
    suite.add_argument("--scale", type=int, default=0, choices=[0, 1, 2],
                       help="0: seconds per row, 1: minutes, 2: beyond the default budget")
    suite.add_argument("--time-budget", type=_limit, default=DEFAULT_TIME_BUDGET)
    suite.add_argument("--csv", dest="csv_path", default=None, help="also write CSV here")

    canon = sub.add_parser("canon", help="print the lex-leader of a matrix's class")
    canon.add_argument("matrix", help="matrix file ('-' for stdin)")
    canon.add_argument("--limit", type=int, default=DEFAULT_ROW_LIMIT)

    check = sub.add_parser("check", help="evaluate a checker on a matrix")
    check.add_argument("checker", choices=sorted(CHECKERS))
    check.add_argument("matrix", help="matrix file ('-' for stdin)")
    return parser


def _expected(row) -> dict | None:
    for e in load_expected():
        if (e["problem"], e["params"], e["sb"]) == (row.problem, row.params, row.sb):
            return e
    return None


def cmd_run(args) -> int:
    order = VarOrder(args.var_order) if args.var_order else None
    row = run_experiment(args.problem, args.sb, args.value_sb, args.classify, order,
                         args.time_budget, args.max_solutions)
    e = _expected(row)
    if e is not None and (e.get("classes") is None or args.classify):
        row.expected = e
    print(to_csv([row]) if args.format == "csv" else to_markdown([row]), end="")
    return 1 if row.verdict == "FAIL" else 0


def cmd_suite(args) -> int:
    def progress(row):
        print(f"{row.verdict:4} {row.problem}:{row.params} {row.sb}", file=sys.stderr)

    rows = run_suite(args.table, args.scale, args.time_budget, progress)
    if args.csv_path:
        with open(args.csv_path, "w") as fh:
            fh.write(to_csv(rows))
    print(to_markdown(rows), end="")
    return 1 if any(r.verdict == "FAIL" for r in rows) else 0


def cmd_canon(args) -> int:
    m = _read_matrix(args.matrix)
    print(canonical_form(m, args.limit).to_text(), end="")
    print(f"lex-leader: {str(is_lex_leader(m, args.limit)).lower()}")
    return 0


def cmd_check(args) -> int:
    ok = bool(CHECKERS[args.checker](_read_matrix(args.matrix)))
    print("true" if ok else "false")
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"run": cmd_run, "suite": cmd_suite, "canon": cmd_canon, "check": cmd_check}
    try:
        return handler[args.command](args)
    except (ValueError, OSError) as e:
        parser.print_usage(sys.stderr)
        print(f"symbreak: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
