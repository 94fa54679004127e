"""Command-line front end.

Exit status is 0 on success, 1 on a domain error (including invariant
violations and exceeded limits) and 2 on a parse error. Diagnostics go to
standard error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import census
from .classifier import classify, classify_complement, theorem_a_check
from .errors import DomainError, LiftError, LimitExceeded, ParseError, RealizationError
from .groups import (
    CENSUS_LIMIT,
    MatrixGroup,
    find_realization,
    order_census_bruteforce,
    realize_complement,
    realize_frobenius,
    semidirect_product,
)
from .numtheory import DiophantineFamily, Family, ZsigmondyQuery, is_zsigmondy_exception, solve_family, zsigmondy
from .orderclasses import complement_census, spec_census
from .specs import FrobeniusSpec, parse_complement, parse_spec


def _limit(args) -> int:
    if args.limit is not None:
        return args.limit
    env = os.environ.get("POCFROB_LIMIT")
    if env:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"POCFROB_LIMIT must be an integer, got {env!r}")
    return CENSUS_LIMIT


def cmd_census(args, out) -> int:
    rows = census.enumerate_rows(args.max)
    text = census.render(rows, args.format)
    if text:
        print(text, file=out)
    if args.crosscheck is None:
        return 0
    failed = 0
    for res in census.crosscheck(rows, args.crosscheck):
        status = "pass" if res.passed else "FAIL"
        failed += not res.passed
        print(f"crosscheck\t{res.row.structure_string}\t{status}\t{res.message}", file=out)
    return 1 if failed else 0


def cmd_check(args, out) -> int:
    spec = parse_spec(args.spec)
    if isinstance(spec, FrobeniusSpec):
        verdict = classify(spec)
        print(verdict.summary(), file=out)
        print(f"trace: {verdict.details}", file=out)
        reduction = theorem_a_check(spec)
        print(f"reduction: {'holds' if reduction.poc else 'fails'}: {reduction.details}", file=out)
    else:
        verdict = classify_complement(spec)
        print(verdict.summary(), file=out)
        print(f"trace: {verdict.details}", file=out)
    return 0


def cmd_orders(args, out) -> int:
    spec = parse_spec(args.spec)
    limit = _limit(args)
    if isinstance(spec, FrobeniusSpec):
        if args.brute:
            action = realize_frobenius(spec.kernel, spec.complement)
            if action is None:
                raise RealizationError(f"{spec.complement.text} has no fixed-point-free action on {spec.kernel.label}")
            c = order_census_bruteforce(semidirect_product(spec.kernel, action, limit), limit)
        else:
            c = spec_census(spec)
    elif args.brute:
        c = order_census_bruteforce(MatrixGroup.from_action(find_realization(spec), limit), limit)
    else:
        c = complement_census(spec)
    if args.format == "json":
        print(json.dumps({str(d): n for d, n in c}), file=out)
    else:
        print("order\tcount", file=out)
        for d, n in c:
            print(f"{d}\t{n}", file=out)
    return 0


def cmd_solve(args, out) -> int:
    try:
        tag = Family(args.family)
    except ValueError:
        raise DomainError(f"unknown family {args.family!r}; choose from {', '.join(f.value for f in Family)}")
    for sol in solve_family(DiophantineFamily(tag, args.q), args.bound):
        print(str(sol[0]) if len(sol) == 1 else "(" + ",".join(map(str, sol)) + ")", file=out)
    return 0


def cmd_embed(args, out) -> int:
    spec = parse_complement(args.spec)
    action = realize_complement(spec, args.dim, args.prime, fpf=args.fpf)
    if action is None:
        print("no embedding", file=out)
        return 0
    kind = "fixed-point-free embedding" if args.fpf else "embedding"
    print(f"{kind} of {spec.text} in GL({args.dim},{args.prime})", file=out)
    for label, m in action.generators:
        print(f"{label} = {[list(row) for row in m]}", file=out)
    return 0


def cmd_zsigmondy(args, out) -> int:
    query = ZsigmondyQuery(args.a, args.b, args.n, args.eps)
    result = zsigmondy(query)
    if result.exception:
        print("exception: no primitive prime divisor", file=out)
    else:
        print("primitive prime divisors: " + " ".join(map(str, sorted(result.primitive_divisors))), file=out)
    named = is_zsigmondy_exception(args.a, args.b, args.n, args.eps)
    print(f"named exception: {'yes' if named else 'no'}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pocfrob", description="Frobenius groups with perfect order classes")
    parser.add_argument(
        "--limit", type=int, default=None,
        help=f"brute-force group size limit (default {CENSUS_LIMIT}, or $POCFROB_LIMIT)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="list groups from the classified families")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=("tsv", "json", "markdown"), default="tsv")
    p.add_argument("--crosscheck", type=int, metavar="L", help="brute-force check rows of order <= L")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("check", help="POC verdict for a group or complement")
    p.add_argument("spec")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("orders", help="element-order census")
    p.add_argument("spec")
    p.add_argument("--brute", action="store_true", help="count on a concrete realization")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_orders)

    p = sub.add_parser("solve", help="bounded Diophantine solver")
    p.add_argument("family")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--q", type=int, default=None)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("embed", help="search GL(r,p) for a complement")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--spec", required=True)
    p.add_argument("--fpf", action="store_true", help="require a fixed-point-free embedding")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("zsigmondy", help="primitive prime divisors of a^n + eps b^n")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eps", type=int, required=True, choices=(1, -1))
    p.set_defaults(func=cmd_zsigmondy)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"pocfrob: parse error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, LimitExceeded, RealizationError, LiftError) as exc:
        print(f"pocfrob: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
