"""Command-line front end.

Exit codes: 0 success, 1 usage/parse error, 2 no invariants (m < 0),
3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from math import factorial

from .exact import format_rational
from .hookchar import HookShape, hook_character, hook_dimension, spherical_bruteforce
from .invariant import spherical_via_gram
from .permgroup import BlockStructure, Permutation, check_support, support_cycle
from .spectrum import DEFAULT_NORMALIZATION, DegreeProfile, Normalization, eigenvalue_sum
from .spherical import NoInvariants, SphericalQuery, multiplicity, spherical_big1, spherical_big2

EXIT_OK, EXIT_USAGE, EXIT_NO_INVARIANTS, EXIT_VERIFY = 0, 1, 2, 3

BRUTEFORCE_MAX_ORDER = factorial(10)
GRAM_MAX_N, GRAM_MAX_B = 8, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hookspherical", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p):
        p.add_argument("--format", choices=["json", "text"], default="text")

    sp = sub.add_parser("spherical", help="spherical function value chi^tau[A; n]")
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--blocks", type=_int_list, required=True)
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--support", type=_int_list)
    grp.add_argument("--element", help="explicit group element in cycle notation, e.g. '(1 3 6)(2 5)'")
    sp.add_argument("--method", choices=["closed", "big1", "bruteforce", "gram", "all"], default="closed")
    sp.add_argument("--backend", choices=["numba", "numpy"], default=None)
    fmt(sp)

    ch = sub.add_parser("character", help="hook character value at a conjugacy class")
    ch.add_argument("--N", type=int, required=True)
    ch.add_argument("--b", type=int, required=True)
    ch.add_argument("--class", dest="cycle_type", type=_int_list, required=True)
    fmt(ch)

    ei = sub.add_parser("eigsum", help="eigenvalue sum of P_k on the hook isotype, in kappa")
    ei.add_argument("--profile", required=True, help="d1:n1,d2:n2,... with strictly decreasing d")
    ei.add_argument("--b", type=int, required=True)
    ei.add_argument("--k", type=int, required=True)
    ei.add_argument("--normalization", default=DEFAULT_NORMALIZATION.value,
                    help="plain (default, oracle-certified) or as-printed")
    fmt(ei)

    ve = sub.add_parser("verify", help="run the verification grids")
    ve.add_argument("--suite", choices=["spherical", "identities", "eigsum", "all"], default="all")
    ve.add_argument("--max-p", type=int, default=4)
    ve.add_argument("--max-n", type=int, default=3)
    ve.add_argument("--max-b", type=int, default=3)
    ve.add_argument("--max-gram-n", type=int, default=7)
    ve.add_argument("--random", type=int, default=500, help="random big1/big2 instances")
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--backend", choices=["numba", "numpy"], default=None)
    fmt(ve)
    return parser


def _emit(report: dict, fmt: str, text_lines: list[str]):
    if fmt == "json":
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(text_lines))


def cmd_spherical(args) -> int:
    blocks = BlockStructure(args.blocks)
    shape = HookShape(blocks.N, args.b)
    multiplicity(args.b, blocks.p)
    if args.element is not None:
        g = Permutation.parse(args.element, blocks.N)
        if args.method in ("closed", "big1"):
            raise UsageError("closed forms are only defined at support cycles; use --support")
        query = None
    else:
        query = SphericalQuery(args.b, blocks, check_support(blocks, args.support))
        g = support_cycle(blocks, query.support)

    if args.method != "all":
        wanted = [args.method]
    elif query is None:
        wanted = ["bruteforce", "gram"]
    else:
        wanted = ["closed", "big1", "bruteforce", "gram"]
    values: dict[str, str | None] = {}
    for method in wanted:
        if method == "closed":
            values[method] = format_rational(spherical_big2(query))
        elif method == "big1":
            ok = query is not None and query.ell >= 2
            if not ok and args.method == "big1":
                raise UsageError("big1 needs a support of size >= 2")
            values[method] = format_rational(spherical_big1(query)) if ok else None
        elif method == "bruteforce":
            if blocks.order > BRUTEFORCE_MAX_ORDER:
                if args.method == "bruteforce":
                    raise UsageError(f"#G_n = {blocks.order} exceeds the cap 10!")
                values[method] = None
            else:
                values[method] = format_rational(spherical_bruteforce(shape, blocks, g, backend=args.backend))
        elif method == "gram":
            if blocks.N > GRAM_MAX_N or args.b > GRAM_MAX_B:
                if args.method == "gram":
                    raise UsageError(f"gram oracle capped at N <= {GRAM_MAX_N}, b <= {GRAM_MAX_B}")
                values[method] = None
            else:
                values[method] = format_rational(spherical_via_gram(shape, blocks, g))
    computed = [v for v in values.values() if v is not None]
    report = {
        "b": args.b, "blocks": list(blocks.sizes),
        "support": list(query.support) if query else None,
        "element": g.cycle_string(), "m": blocks.p - args.b - 1,
        "multiplicity": multiplicity(args.b, blocks.p),
        "values": values, "agreement": len(set(computed)) == 1,
    }
    lines = [f"{k:>10}: {v if v is not None else 'skipped (cap)'}" for k, v in values.items()]
    if len(values) > 1:
        lines.append(f"{'agreement':>10}: {str(report['agreement']).lower()}")
    _emit(report, args.format, lines)
    return EXIT_OK if report["agreement"] else EXIT_VERIFY


def cmd_character(args) -> int:
    shape = HookShape(args.N, args.b)
    value = hook_character(shape, args.cycle_type)
    report = {"N": args.N, "b": args.b, "class": list(sorted(args.cycle_type, reverse=True)),
              "value": format_rational(value), "dimension": hook_dimension(shape)}
    _emit(report, args.format, [str(value)])
    return EXIT_OK


def cmd_eigsum(args) -> int:
    profile = DegreeProfile.parse(args.profile)
    norm = Normalization.parse(args.normalization)
    res = eigenvalue_sum(profile, args.b, args.k, norm)
    report = {"profile": str(profile), "b": args.b, "k": args.k,
              "coefficients": res.value.to_strings(), "dimension": res.dimension,
              "multiplicity": res.multiplicity, "normalization": res.normalization.value}
    _emit(report, args.format, [
        f"sum = {res.value}",
        f"coefficients = {json.dumps(report['coefficients'])}",
        f"dim tau = {res.dimension}, multiplicity = {res.multiplicity}, normalization = {norm.value}",
    ])
    return EXIT_OK


def cmd_verify(args) -> int:
    from . import verify

    names = ["identities", "spherical", "eigsum"] if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        if name == "spherical":
            rep = verify.run_spherical(args.max_p, args.max_n, args.max_b, args.max_gram_n,
                                       args.random, args.seed, args.backend)
        elif name == "identities":
            rep = verify.run_identities(args.seed)
        else:
            rep = verify.run_eigsum()
        reports.append(rep)
    ok = all(r.ok for r in reports)
    summary = {
        "ok": ok,
        "suites": [{"name": r.name, "checked": r.checked, "failed": len(r.failures),
                    "first_failure": r.failures[0] if r.failures else None, "info": r.info}
                   for r in reports],
    }
    lines = []
    for r in reports:
        lines.append(f"{r.name:<12} {'PASS' if r.ok else 'FAIL'}  checked={r.checked} failed={len(r.failures)}")
        if r.info:
            lines.append(f"{'':<12} {json.dumps(r.info)}")
        if r.failures:
            lines.append(f"{'':<12} first counterexample: {json.dumps(r.failures[0])}")
    _emit(summary, args.format, lines)
    return EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {"spherical": cmd_spherical, "character": cmd_character,
            "eigsum": cmd_eigsum, "verify": cmd_verify}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except NoInvariants as exc:
        print(f"NoInvariants: {exc}", file=sys.stderr)
        return EXIT_NO_INVARIANTS
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
