"""fglaw command line.

    fglaw series TARGET [--order N] [--format json|text] [specialization]
    fglaw fgl {F,G,G-theorem} [--order N] [--format json|text] [specialization]
    fglaw verify [--order N] [--bi-order M] [--only NAME ...]
    fglaw numeric (--p P1 P2 P3 P4 | --jacobi K) --x X --y Y [--tol T]

Exit codes: 0 success, 1 identity failure, 2 usage error, 3 numeric domain or
convergence error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import addition, buchstaber, numeric, params as P, serialize, suite
from .algebra import ParamPoint
from .series import SeriesError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3

SERIES_TARGETS = ("R", "B", "A", "mu", "nu", "logF", "expF", "logG", "SN")
FGL_TARGETS = ("F", "G", "G-theorem")


def _add_specialization(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--jacobi", action="store_true",
                   help="R^2 = (1 - t^2)(1 - k^2 t^2) with symbolic k")
    g.add_argument("--jacobi-fkh", action="store_true",
                   help="p = (0, 2(1+k^2), 0, (1-k^2)^2) with symbolic k")
    g.add_argument("--ochanine", action="store_true",
                   help="R^2 = 1 + delta t^2 + epsilon t^4, symbolic delta, epsilon")
    g.add_argument("--point", nargs=4, metavar="Pi",
                   help="exact rational values of p1..p4, e.g. 0 -1 0 1/4")


def _params_from(args) -> P.Params:
    if args.jacobi:
        return P.euler_jacobi()
    if args.jacobi_fkh:
        return P.fkh_jacobi()
    if args.ochanine:
        return P.ochanine()
    if args.point:
        return P.rational_point(args.point)
    return P.generic()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fglaw",
        description="Exact series for the Buchstaber formal group law and the "
        "addition law of the general elliptic integral.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("series", help="print a univariate series")
    s.add_argument("target", choices=SERIES_TARGETS)
    s.add_argument("--order", type=int, default=suite.DEFAULT_ORDER)
    s.add_argument("--format", choices=("json", "text"), default="text")
    _add_specialization(s)

    f = sub.add_parser("fgl", help="print a two-variable formal group law")
    f.add_argument("target", choices=FGL_TARGETS)
    f.add_argument("--order", type=int, default=suite.DEFAULT_BI_ORDER)
    f.add_argument("--format", choices=("json", "text"), default="text")
    _add_specialization(f)

    v = sub.add_parser("verify", help="run the exact identity checks")
    v.add_argument("--order", type=int, default=suite.DEFAULT_ORDER,
                   help="univariate truncation order")
    v.add_argument("--bi-order", type=int, default=suite.DEFAULT_BI_ORDER,
                   help="total-degree truncation for two-variable checks")
    v.add_argument("--only", nargs="+", metavar="NAME", choices=sorted(suite.CHECKS))
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--inject", choices=P.FAULTS,
                   help="corrupt B on purpose (negative control)")

    n = sub.add_parser("numeric", help="quadrature check of the addition formula")
    g = n.add_mutually_exclusive_group(required=True)
    g.add_argument("--p", nargs=4, type=float, metavar="Pi")
    g.add_argument("--jacobi", type=float, metavar="K", help="modulus k, 0 <= k < 1")
    n.add_argument("--x", type=float, required=True)
    n.add_argument("--y", type=float, required=True)
    n.add_argument("--tol", type=float, default=1e-9)
    n.add_argument("--order", type=int, default=None,
                   help=f"series order (default {numeric.DEFAULT_ORDER}; 40 with --jacobi)")
    n.add_argument("--radius", type=float, default=None,
                   help=f"largest |x|, |y| accepted (default {numeric.DEFAULT_RADIUS}; 0.5 with --jacobi)")
    n.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def cmd_series(args) -> int:
    params = _params_from(args)
    if args.target in ("logG", "SN"):
        logG, sn = addition.build_logG_SN(args.order, params)
        s = logG if args.target == "logG" else sn
    else:
        s = buchstaber.build_canonical(args.order, params).named()[args.target]
    if args.format == "json":
        print(json.dumps(serialize.uni_to_json(s)))
    else:
        print(serialize.uni_to_text(s, args.target))
    return EXIT_OK


def cmd_fgl(args) -> int:
    params = _params_from(args)
    if args.target == "F":
        s = buchstaber.build_F(args.order, params)
    elif args.target == "G":
        s = addition.build_G_via_exp(args.order, params)
    else:
        s = addition.build_G_via_theorem(args.order, params)
    if args.format == "json":
        print(json.dumps(serialize.bi_to_json(s)))
    else:
        print(serialize.bi_to_text(s, args.target))
    return EXIT_OK


def cmd_verify(args) -> int:
    params = P.generic().with_fault(args.inject)
    reports = suite.run_checks(args.only, args.order, args.bi_order, params)
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.line())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_numeric(args) -> int:
    if args.jacobi is not None:
        if not 0.0 <= args.jacobi < 1.0:
            print("error: --jacobi needs 0 <= k < 1", file=sys.stderr)
            return EXIT_USAGE
        point = ParamPoint.jacobi(args.jacobi)
        order = args.order or 40
        radius = args.radius or 0.5
        exact = False
    else:
        point = ParamPoint(*args.p)
        order = args.order or numeric.DEFAULT_ORDER
        radius = args.radius or numeric.DEFAULT_RADIUS
        exact = order <= numeric.DEFAULT_ORDER
    if args.tol < numeric.MIN_TOL:
        print(f"error: --tol must be at least {numeric.MIN_TOL:g}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = numeric.addition_check(point, args.x, args.y, args.tol, order, radius, exact)
    except numeric.NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    e = report.extra
    if args.format == "json":
        print(json.dumps({k: e[k] for k in ("I(x)", "I(y)", "G", "I(G)", "residual")}
                         | {"tol": args.tol, "passed": report.passed}))
    else:
        for key in ("I(x)", "I(y)", "G", "I(G)"):
            print(f"{key:>9} = {e[key]:.15g}")
        print(f"{'residual':>9} = {e['residual']:.3e}  (tol {args.tol:.1e})")
    return EXIT_OK if report.passed else EXIT_FAIL


COMMANDS = {"series": cmd_series, "fgl": cmd_fgl, "verify": cmd_verify, "numeric": cmd_numeric}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "order", None) is not None and args.order < 1:
        parser.error("--order must be at least 1")
    try:
        return COMMANDS[args.command](args)
    except (SeriesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
