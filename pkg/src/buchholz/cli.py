"""Command-line front end.

Terms are given inline, forests as paths to JSON files (``-`` reads stdin).
Exit codes: 0 success, 1 domain error or exceeded cap, 2 usage error,
3 verification found violations.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from buchholz.collapse import CollapseError, translate, translate_sum
from buchholz.forest import (
    DoubleForest, canonical_form, covering_exists, height, m2f_height, validate_double_forest,
    validate_m2f,
)
from buchholz.order import compare
from buchholz.ot import ResourceLimitExceeded, describe_violation, enumerate_ot, in_ot_restricted, is_ot
from buchholz.term import OMEGA, ParseError, is_principal, norm, order, parse, show
from buchholz.verify import Budget, longest_controlled_bad_sequence, run_suite, suite_names

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VIOLATIONS = 0, 1, 2, 3


class _DomainError(Exception):
    pass


def _emit(args, text: str, payload=None):
    if getattr(args, "json", False) and payload is not None:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _term(text: str):
    try:
        return parse(text)
    except ParseError as exc:
        raise _DomainError(f"cannot parse {text!r}: {exc}") from exc


def _forest(path: str) -> DoubleForest:
    try:
        if path == "-":
            data = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                data = fh.read()
        return DoubleForest.from_json(json.loads(data))
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise _DomainError(f"cannot read forest {path!r}: {exc}") from exc


def _index(text: str):
    if text in ("w", "omega"):
        return OMEGA
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a subscript: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("subscripts are natural numbers")
    return value


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {value}")
    return value


def cmd_parse(args) -> int:
    a = _term(args.term)
    _emit(args, show(a), {"term": show(a), "norm": norm(a), "order": str(order(a)),
                          "principal": is_principal(a)})
    return EXIT_OK


def cmd_compare(args) -> int:
    c = compare(_term(args.a), _term(args.b))
    _emit(args, str(c), {"a": show(_term(args.a)), "b": show(_term(args.b)), "result": str(c)})
    return EXIT_OK


def cmd_validate(args) -> int:
    a = _term(args.term)
    if args.below is not None:
        ok = in_ot_restricted(a, args.below)
        text = f"OT({args.below})" if ok else f"NOT-OT({args.below})"
        if not is_ot(a):
            text += f" {describe_violation(a)}"
        _emit(args, text, {"term": show(a), "ok": ok, "bound": str(args.below)})
        return EXIT_OK if ok else EXIT_DOMAIN
    ok = is_ot(a)
    text = "OT" if ok else f"NOT-OT {describe_violation(a)}"
    payload = {"term": show(a), "ok": ok}
    if not ok:
        payload["clause"] = describe_violation(a).split(":")[0]
    _emit(args, text, payload)
    return EXIT_OK if ok else EXIT_DOMAIN


def cmd_enumerate(args) -> int:
    for a in enumerate_ot(args.max_sub, args.max_norm, order_zero_only=args.order_zero):
        print(json.dumps(show(a)) if getattr(args, "json", False) else show(a))
    return EXIT_OK


def cmd_translate(args) -> int:
    a = _term(args.term)
    try:
        f = translate_sum(a) if args.sum else translate(a)
    except CollapseError as exc:
        raise _DomainError(str(exc)) from exc
    if args.dot:
        sys.stdout.write(f.to_dot())
    elif getattr(args, "json", False):
        print(f.dumps())
    else:
        print(f"nodes={len(f)} height={height(f)} m2f_height={m2f_height(f)}")
        print(f.dumps())
    return EXIT_OK


def cmd_cover(args) -> int:
    s, t = _forest(args.source), _forest(args.target)
    for name, f in (("source", s), ("target", t)):
        report = validate_double_forest(f)
        if not report:
            raise _DomainError(f"{name} is not a double forest: {report}")
    h = covering_exists(s, t)
    text = "NONE" if h is None else json.dumps(h, sort_keys=True)
    _emit(args, text, {"covering": h})
    return EXIT_OK


def cmd_validate_forest(args) -> int:
    f = _forest(args.forest)
    report = validate_m2f(f) if args.m2f else validate_double_forest(f)
    payload = {"ok": report.ok, "axiom": report.axiom, "witness": list(report.witness)}
    if report.ok and validate_m2f(f):
        payload["canonical_form"] = repr(canonical_form(f))
    _emit(args, str(report), payload)
    return EXIT_OK if report.ok else EXIT_DOMAIN


def _budget(args) -> Budget:
    return Budget(getattr(args, "max_instances", None), getattr(args, "time_budget", None))


def cmd_verify(args) -> int:
    names = suite_names() if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in suite_names():
        print(f"unknown suite {args.suite!r}; known: {', '.join(suite_names())}", file=sys.stderr)
        return EXIT_USAGE
    params = {"max_sub": args.max_sub, "max_norm": args.max_norm, "max_nodes": args.max_nodes}
    failed = False
    for name in names:
        report = run_suite(name, params, _budget(args), jobs=getattr(args, "jobs", 1))
        failed |= not report.passed
        if getattr(args, "json", False):
            print(report.dumps())
        else:
            print(report.summary())
            for v in report.violations[:5]:
                print("  " + json.dumps(v, sort_keys=True))
    return EXIT_VIOLATIONS if failed else EXIT_OK


def cmd_experiment(args) -> int:
    result = longest_controlled_bad_sequence(
        args.c, args.domain, args.length_cap, height_cap=args.height_cap,
        max_subscript=args.max_sub, max_steps=args.max_steps)
    if getattr(args, "json", False):
        print(json.dumps(result.to_json(), sort_keys=True))
    else:
        print(f"c={result.c} domain={result.domain} length={result.length} "
              f"exhausted={str(result.exhausted).lower()} steps={result.steps}")
        for item in result.sequence:
            print("  " + (item if isinstance(item, str) else json.dumps(item, sort_keys=True)))
    if result.capped:
        print(f"step cap {args.max_steps} reached; result is partial", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="worker processes for pair suites")
    common.add_argument("--max-instances", type=_natural, default=argparse.SUPPRESS,
                        help="fail once more instances than this are checked")
    common.add_argument("--time-budget", type=float, default=argparse.SUPPRESS,
                        help="fail once this many seconds have passed")

    parser = argparse.ArgumentParser(prog="buchholz", parents=[common],
                                     description="Ordinal terms, monotone double trees and checks relating them.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(fn=fn)
        return p

    p = add("parse", cmd_parse, "parse a term and print it in normal form")
    p.add_argument("term")
    # "print" is the same operation under its other name
    p = add("print", cmd_parse, "alias of parse")
    p.add_argument("term")

    p = add("compare", cmd_compare, "compare two terms: LT, EQ or GT")
    p.add_argument("a")
    p.add_argument("b")

    p = add("validate", cmd_validate, "check membership in OT, or in OT(u) with --below")
    p.add_argument("term")
    p.add_argument("--below", type=_index, default=None, metavar="U")

    p = add("enumerate", cmd_enumerate, "list ordinal terms in increasing order, one per line")
    p.add_argument("--max-sub", type=_natural, required=True)
    p.add_argument("--max-norm", type=_natural, required=True)
    p.add_argument("--order-zero", action="store_true", help="only terms of order 0")

    p = add("translate", cmd_translate, "map a term to its monotone double tree")
    p.add_argument("term")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p.add_argument("--sum", action="store_true", help="order-0 term, common root over its parts")

    p = add("cover", cmd_cover, "search for a covering of SOURCE into TARGET")
    p.add_argument("source")
    p.add_argument("target")

    p = add("validate-forest", cmd_validate_forest, "check the double forest axioms")
    p.add_argument("forest")
    p.add_argument("--m2f", action="store_true", help="also check the label conditions")

    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("--suite", required=True, help="suite id or 'all': " + ", ".join(suite_names()))
    p.add_argument("--max-sub", type=_natural)
    p.add_argument("--max-norm", type=_natural)
    p.add_argument("--max-nodes", type=_natural)

    p = add("experiment", cmd_experiment, "longest controlled bad sequence search")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--domain", choices=["double-trees", "trees", "ot-terms"], required=True)
    p.add_argument("--length-cap", type=_natural, required=True)
    p.add_argument("--height-cap", type=_natural)
    p.add_argument("--max-sub", type=_natural, default=1)
    p.add_argument("--max-steps", type=_natural, default=200_000)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (_DomainError, CollapseError, ResourceLimitExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Like :func:`main` but returns 2 on usage errors instead of exiting."""
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
