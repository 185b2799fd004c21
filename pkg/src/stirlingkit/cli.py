"""Command-line front end.

    stirlingkit stirling {s1,s1u,s2} N K
    stirlingkit table {s1,s1u,s2} N_MAX
    stirlingkit bell N
    stirlingkit convert {ff2pow,pow2ff} C0,C1,...
    stirlingkit verify {rewrite,oracle-log,oracle-exp,egf,inverse,bell} [N_MAX]

Every subcommand accepts ``--csv`` or ``--json`` and ``--cap``. Exit status
is 0 on success, 1 when a verification fails, 2 on usage errors and 3 when
the row cap is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .basis import (
    Basis,
    PolyCoeffs,
    check_inverse_matrix,
    falling_to_power,
    format_coeffs,
    parse_coeffs,
    power_to_falling,
)
from .egf import check_bell_routes, check_egf_against_triangle
from .errors import CoefficientParseError, RowCapExceeded
from .oracle import (
    CaseKind,
    check_bell_polynomial_identity,
    check_rewrite_against_recurrence,
    standard_corpus,
    verify_identity,
)
from .triangle import TriangleKind, bell_number, build_triangle, row_cap

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

SUITE_DEFAULTS = {
    "rewrite": 30,
    "oracle-log": 20,
    "oracle-exp": 20,
    "egf": 25,
    "inverse": 30,
    "bell": 10,
}


class UsageError(Exception):
    pass


def _index(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"index must be >= 0, got {value}")
    return value


def _fmt(args) -> str:
    if args.json:
        return "json"
    if args.csv:
        return "csv"
    return "plain"


def _rows_for(kind: str, n_max: int, cap: int) -> list[list[int]]:
    if kind == "s2":
        return build_triangle(TriangleKind.SECOND_KIND, n_max, cap=cap).to_lists()
    rows = build_triangle(TriangleKind.FIRST_KIND_SIGNED, n_max, cap=cap).to_lists()
    if kind == "s1u":
        rows = [[abs(v) for v in r] for r in rows]
    return rows


def _resolve_n_max(args, default: int | None = None) -> int:
    pos, flag = args.n_max, args.n_max_flag
    if pos is not None and flag is not None and pos != flag:
        raise UsageError(f"conflicting n_max values {pos} and --n-max {flag}")
    value = pos if pos is not None else flag
    if value is None:
        if default is None:
            raise UsageError("n_max is required")
        value = default
    return value


def cmd_stirling(args, cap: int) -> int:
    n, k = args.n, args.k
    if n > cap:
        raise RowCapExceeded(n, cap)
    value = _rows_for(args.kind, n, cap)[n][k] if k <= n else 0
    fmt = _fmt(args)
    print(json.dumps(str(value)) if fmt == "json" else str(value))
    return EXIT_OK


def cmd_table(args, cap: int) -> int:
    n_max = _resolve_n_max(args)
    rows = _rows_for(args.kind, n_max, cap)
    fmt = _fmt(args)
    if fmt == "json":
        print(json.dumps([[str(v) for v in r] for r in rows]))
    elif fmt == "csv":
        print("\n".join(",".join(str(v) for v in r) for r in rows))
    else:
        width = max(len(str(v)) for r in rows for v in r)
        print("\n".join(" ".join(str(v).rjust(width) for v in r) for r in rows))
    return EXIT_OK


def cmd_bell(args, cap: int) -> int:
    if args.n > cap:
        raise RowCapExceeded(args.n, cap)
    value = bell_number(args.n)
    print(json.dumps(str(value)) if _fmt(args) == "json" else str(value))
    return EXIT_OK


def cmd_convert(args, cap: int) -> int:
    coeffs = parse_coeffs(args.coeffs)
    if len(coeffs) - 1 > cap:
        raise RowCapExceeded(len(coeffs) - 1, cap)
    if args.direction == "ff2pow":
        out = falling_to_power(PolyCoeffs(Basis.FALLING_FACTORIAL, coeffs))
    else:
        out = power_to_falling(PolyCoeffs(Basis.POWER, coeffs))
    tokens = format_coeffs(out)
    print(json.dumps(tokens) if _fmt(args) == "json" else ",".join(tokens))
    return EXIT_OK


def _run_suite(suite: str, n_max: int, cap: int):
    if n_max > cap:
        raise RowCapExceeded(n_max, cap)
    if suite == "rewrite":
        return [check_rewrite_against_recurrence(n_max, cap=cap)]
    if suite in ("oracle-log", "oracle-exp"):
        kind = CaseKind.LOG if suite == "oracle-log" else CaseKind.EXP
        corpus = standard_corpus(max(n_max, 6))
        return [verify_identity(kind, corpus, n_max)]
    if suite == "egf":
        return [check_egf_against_triangle(kind, n_max) for kind in TriangleKind]
    if suite == "inverse":
        return [check_inverse_matrix(n_max)]
    if suite == "bell":
        return [check_bell_routes(n_max), check_bell_polynomial_identity(n_max)]
    raise UsageError(f"unknown suite {suite!r}")


def cmd_verify(args, cap: int) -> int:
    n_max = _resolve_n_max(args, SUITE_DEFAULTS[args.suite])
    reports = _run_suite(args.suite, n_max, cap)
    ok = all(r.all_passed for r in reports)
    fmt = _fmt(args)
    if fmt == "json":
        print(json.dumps({
            "suite": args.suite,
            "n_max": n_max,
            "all_passed": ok,
            "reports": [r.to_dict() for r in reports],
        }))
    elif fmt == "csv":
        print("report,label,index,pass")
        for r in reports:
            for c in r.checks:
                idx = ";".join(str(i) for i in c.index)
                print(f"{r.kind},{c.label},{idx},{int(c.passed)}")
    else:
        for r in reports:
            print(r.to_table(verbose=args.verbose))
        print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true", help="comma-separated output")
    fmt.add_argument("--json", action="store_true", help="JSON output, numbers as strings")
    common.add_argument("--cap", type=_index, default=None,
                        help="row cap (overrides $STIRLINGKIT_ROW_CAP)")

    parser = argparse.ArgumentParser(prog="stirlingkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stirling", parents=[common], help="a single Stirling number")
    p.add_argument("kind", choices=["s1", "s1u", "s2"])
    p.add_argument("n", type=_index)
    p.add_argument("k", type=_index)
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("table", parents=[common], help="a full Stirling triangle")
    p.add_argument("kind", choices=["s1", "s1u", "s2"])
    p.add_argument("n_max", type=_index, nargs="?")
    p.add_argument("--n-max", dest="n_max_flag", type=_index)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bell", parents=[common], help="a Bell number")
    p.add_argument("n", type=_index)
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("convert", parents=[common], help="change polynomial basis")
    p.add_argument("direction", choices=["ff2pow", "pow2ff"])
    p.add_argument("coeffs", help="comma-separated p or p/q tokens, lowest degree first")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=list(SUITE_DEFAULTS))
    p.add_argument("n_max", type=_index, nargs="?")
    p.add_argument("--n-max", dest="n_max_flag", type=_index)
    p.add_argument("-v", "--verbose", action="store_true", help="list every check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cap = args.cap if args.cap is not None else row_cap()
        return args.func(args, cap)
    except CoefficientParseError as exc:
        print(f"stirlingkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        parser.error(str(exc))
    except RowCapExceeded as exc:
        print(f"stirlingkit: resource error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        # malformed environment cap
        print(f"stirlingkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
