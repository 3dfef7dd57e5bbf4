"""Command-line interface: dimension, coeffs, count, bijection, table, verify.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
Output is human-readable text by default; --format json emits the documented
JSON schemas.  All commands are deterministic.
"""
from __future__ import annotations

import argparse
import json
import sys

from .binomial import a_coefficients, eval_f_large, fit_binomial_coefficients
from .bijections import chain_to_alpha, compute_p, compute_q, down_map, up_map
from .errors import SytpolyError
from .partitions import parse_partition
from .tableaux import (
    count_restricted,
    dimension_hook,
    enumerate_restricted,
    parse_tableau,
    satisfies_condition,
)
from .verify import run_checks


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sytpoly")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dimension", help="tableau count of a shape, or with a prepended row")
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("coeffs", help="binomial-basis coefficient vectors of a shape")
    p.add_argument("--shape", required=True)
    _add_common(p)

    p = sub.add_parser("count", help="restricted tableau count for a window")
    p.add_argument("--shape", required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--list", action="store_true", dest="list_members")
    _add_common(p)

    p = sub.add_parser("bijection", help="apply one alpha step to a tableau")
    p.add_argument("--shape", required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--direction", choices=("down", "up"), required=True)
    p.add_argument("--tableau", required=True)
    _add_common(p)

    p = sub.add_parser("table", help="full alpha chains for every top-window tableau")
    p.add_argument("--shape", required=True)
    p.add_argument("--h", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("verify", help="re-prove all identities up to a size bound")
    p.add_argument("--max-k", type=int, default=8)
    p.add_argument("--check", action="append", default=None)
    _add_common(p)

    return parser


def cmd_dimension(args) -> int:
    lam = parse_partition(args.shape)
    value = dimension_hook(lam) if args.n is None else eval_f_large(lam, args.n)
    if args.format == "json":
        out = {"shape": list(lam.parts), "dimension": value}
        if args.n is not None:
            out["n"] = args.n
        print(json.dumps(out))
    else:
        print(value)
    return 0


def cmd_coeffs(args) -> int:
    lam = parse_partition(args.shape)
    a = a_coefficients(lam)
    b = fit_binomial_coefficients(lam)
    if args.format == "json":
        print(json.dumps({"lambda": list(lam.parts), "a": list(a.a), "b": list(b.coeffs)}))
    else:
        print(f"a={json.dumps(list(a.a))}")
        print(f"b={json.dumps(list(b.coeffs))}")
    return 0


def cmd_count(args) -> int:
    lam = parse_partition(args.shape)
    members = enumerate_restricted(lam, args.h, args.alpha)
    if args.format == "json":
        out = {"shape": list(lam.parts), "h": args.h, "alpha": args.alpha,
               "count": len(members)}
        if args.list_members:
            out["tableaux"] = [t.to_json_dict() for t in members]
        print(json.dumps(out))
    else:
        print(len(members))
        if args.list_members:
            for t in members:
                print(t.to_text())
    return 0


def cmd_bijection(args) -> int:
    lam = parse_partition(args.shape)
    tab = parse_tableau(args.tableau)
    if tab.shape != lam:
        raise SytpolyError(f"tableau shape {tab.shape.parts} != --shape {lam.parts}")
    if args.direction == "down":
        result = down_map(tab, args.h, args.alpha)
    else:
        result = up_map(tab, args.h, args.alpha)

    pivot = None
    identity = satisfies_condition(tab, args.h, args.alpha) and \
        satisfies_condition(tab, args.h, args.alpha - 1)
    if not identity:
        if args.direction == "down":
            pivot = {"q": compute_q(tab, args.h, args.alpha).value}
        else:
            pivot = {"p": compute_p(tab, args.h, args.alpha).value}

    if args.format == "json":
        out = {"shape": list(lam.parts), "h": args.h, "alpha": args.alpha,
               "direction": args.direction, "input": tab.to_json_dict()}
        if pivot is not None:
            out["pivot"] = pivot
        out["output"] = result.to_json_dict()
        print(json.dumps(out))
    else:
        print(f"input:  {tab.to_text()}")
        if pivot is not None:
            name, value = next(iter(pivot.items()))
            print(f"pivot:  {name}={value}")
        print(f"output: {result.to_text()}")
    return 0


def cmd_table(args) -> int:
    lam = parse_partition(args.shape)
    k = lam.weight
    top = k - args.h
    if args.h < 0 or args.h > lam.length:
        raise SytpolyError(f"need 0 <= h <= {lam.length}")
    chains = []
    for tab in enumerate_restricted(lam, args.h, top):
        chain = [tab]
        for alpha in range(top, 0, -1):
            chain.append(down_map(chain[-1], args.h, alpha))
        chain.reverse()  # index by alpha, 0 first
        chains.append(chain)
    if args.format == "json":
        print(json.dumps({
            "shape": list(lam.parts), "h": args.h,
            "chains": [[t.to_json_dict() for t in chain] for chain in chains],
        }))
    else:
        for chain in chains:
            print("  <->  ".join(t.to_text() for t in chain))
    return 0


def cmd_verify(args) -> int:
    if args.max_k < 1:
        print("error: --max-k must be at least 1", file=sys.stderr)
        return 2
    try:
        reports = run_checks(args.max_k, args.check)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    failed = False
    for rep in reports:
        if args.format == "json":
            print(json.dumps(rep.to_json_dict()))
        else:
            status = "PASS" if rep.passed else "FAIL"
            print(f"{status} {rep.check_name} cases={rep.cases_run} failures={len(rep.failures)}")
            for failure in rep.failures[:5]:
                print(f"  counterexample: {failure}")
        failed = failed or not rep.passed
    return 1 if failed else 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    handlers = {
        "dimension": cmd_dimension,
        "coeffs": cmd_coeffs,
        "count": cmd_count,
        "bijection": cmd_bijection,
        "table": cmd_table,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except SytpolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
