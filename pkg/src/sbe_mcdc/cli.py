"""Command-line entry point.

Exit status: 0 success, 1 verification failure, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bench
from .coverage import CRITERIA, UNIQUE_CAUSE, brute_force_minimal, coverage
from .errors import SbeError
from .expr import evaluate, parse, render, validate_sbe, variables
from .generator import generate, to_assignments
from .normalize import normalize
from .planner import decompose, relation_table, render_tree

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_expr(args):
    if args.expr is not None:
        text = args.expr
    else:
        try:
            text = Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from exc
    return parse(text.strip())


def _emit(args, text: str):
    if getattr(args, "out", None):
        Path(args.out).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    else:
        print(text)


def cmd_check(args) -> int:
    e = _read_expr(args)
    validate_sbe(e)
    n = normalize(e)
    payload = {"expression": render(e), "normalized": n.render(), "n": n.n}
    if n.n >= 2:
        payload["relation_table"] = list(relation_table(n).values)
        payload["forms"] = str(decompose(n))
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2))
        return EXIT_OK
    lines = [f"SBE with N = {n.n}", f"normalized: {n.render()}"]
    if args.verbose and n.n >= 2:
        lines.append(f"relation table: {relation_table(n)}")
        lines.append("forms:")
        lines.append(render_tree(decompose(n), "  "))
    _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_generate(args) -> int:
    e = _read_expr(args)
    n = normalize(e)
    table = generate(n)
    order = variables(e)
    tests = to_assignments(table, order)
    if args.format == "csv" or (args.out and args.format == "table"):
        if args.out:
            bench.emit_csv(e, tests, args.out, order)
        else:
            lines = [",".join([*order, bench.DECISION])]
            lines += [",".join([*(str(int(a[v])) for v in order), str(int(evaluate(e, a)))]) for a in tests]
            print("\n".join(lines))
        return EXIT_OK
    if args.format == "json":
        payload = {
            "expression": render(e),
            "normalized": n.render(),
            "n": n.n,
            "columns": list(order),
            "tests": [[int(a[v]) for v in order] for a in tests],
            "decisions": [int(evaluate(e, a)) for a in tests],
        }
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    width = max(len(v) for v in order)
    print(" ".join(f"{v:>{width}}" for v in ["#", *order, "F"]))
    for i, a in enumerate(tests, start=1):
        cells = [str(i), *(str(int(a[v])) for v in order), str(int(evaluate(e, a)))]
        print(" ".join(f"{c:>{width}}" for c in cells))
    return EXIT_OK


def cmd_verify(args) -> int:
    e = _read_expr(args)
    tests = bench.import_csv(args.csv, e)
    report = coverage(e, tests, args.criterion)
    if args.format == "json":
        print(json.dumps(dict(report.to_dict(), summary=report.summary()), indent=2))
    else:
        print(report.format())
    return EXIT_OK if report.complete else EXIT_FAIL


def cmd_bench(args) -> int:
    report = bench.run_bench(workers=args.workers)
    text = report.to_json() if args.report == "json" else report.format()
    _emit(args, text)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_oracle(args) -> int:
    e = _read_expr(args)
    validate_sbe(e)
    result = brute_force_minimal(e, args.criterion, args.max_n)
    order = variables(e)
    if args.format == "json":
        payload = {
            "n": len(order),
            "criterion": result.criterion,
            "size": result.size,
            "columns": list(order),
            "witness": [[int(w[v]) for v in order] for w in result.witness],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(result.size)
    return EXIT_OK


def cmd_emit_c(args) -> int:
    e = _read_expr(args)
    if args.out:
        bench.emit_c_source(e, args.name, args.out)
    else:
        print(bench.c_source(e, args.name), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sbe-mcdc",
        description="Minimal unique-cause MC/DC test sets for singular boolean expressions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--expr", help="decision text, e.g. 'a && (b || c)'")
        group.add_argument("--file", help="UTF-8 file holding the decision text")
        return p

    p = with_input(sub.add_parser("check", help="validate and show the normalized form"))
    p.add_argument("--verbose", action="store_true", help="also print forms and relation table")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)

    p = with_input(sub.add_parser("generate", help="build the N+1 test table"))
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.add_argument("--out", help="write CSV here")
    p.set_defaults(func=cmd_generate)

    p = with_input(sub.add_parser("verify", help="measure coverage of a CSV test set"))
    p.add_argument("--csv", required=True, help="test vectors in the CSV format")
    p.add_argument("--criterion", choices=CRITERIA, default=UNIQUE_CAUSE)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run the 15-case TCAS-II benchmark")
    p.add_argument("--report", choices=["table", "json"], default="table")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)

    p = with_input(sub.add_parser("oracle", help="exhaustive minimal test-set size (small N)"))
    p.add_argument("--criterion", choices=CRITERIA, default=UNIQUE_CAUSE)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_oracle)

    p = with_input(sub.add_parser("emit-c", help="write a C function wrapping the decision"))
    p.add_argument("--name", default="decision")
    p.add_argument("--out")
    p.set_defaults(func=cmd_emit_c)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SbeError, UsageError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
