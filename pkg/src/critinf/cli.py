"""Command line: ``critinf crit`` and ``critinf parcrit``.

Exit status 0 on success, 2 when a hypothesis of the method fails
(non-isolated singularities, no covering chart), 3 on malformed input.
"""

from __future__ import annotations

import argparse
import logging
import sys
import warnings

from .crit import HypothesisViolation, analyze_with_splitting
from .family import DegreeNotConstant, FamilySpec, par_crit
from .fields import QQ, AlgebraicField, RationalFunctionField
from .parser import ParseError, parse_dense
from .poly import PolyRing
from .report import crit_to_dict, format_crit, format_parcrit, parcrit_to_dict, to_json

__all__ = ["main", "build_parser", "InputError"]

EXIT_OK = 0
EXIT_HYPOTHESIS = 2
EXIT_PARSE = 3


class InputError(ValueError):
    """Malformed command line or job description."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _variables(text: str) -> tuple[str, ...]:
    names = tuple(v.strip() for v in text.split(",") if v.strip())
    if not names:
        raise InputError("no variables given")
    if len(set(names)) != len(names):
        raise InputError(f"variables are not distinct: {text}")
    for v in names:
        if not v.isidentifier():
            raise InputError(f"bad variable name {v!r}")
    return names


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="critinf", description="Milnor numbers and critical values at infinity.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("crit", help="analyze one polynomial")
    c.add_argument("--vars", required=True, help="comma separated ring variables")
    c.add_argument("--param", help="name of a transcendental field parameter")
    c.add_argument("--minpoly", help="make the parameter algebraic with this minimal polynomial")
    c.add_argument("--chart", type=int, help="chart x_k=1 used at infinity (1-based)")
    c.add_argument("--generic-change", type=int, metavar="SEED",
                   help="apply a seeded random unimodular linear change first")
    c.add_argument("--json", action="store_true")
    c.add_argument("poly")

    q = sub.add_parser("parcrit", help="critical parameters of a family")
    q.add_argument("--vars", required=True, help="comma separated ring variables")
    q.add_argument("--family-param", required=True, help="name of the deformation parameter")
    q.add_argument("--json", action="store_true")
    q.add_argument("poly")
    return p


def _field(args):
    if args.minpoly and not args.param:
        raise InputError("--minpoly needs --param")
    if not args.param:
        return QQ
    if args.minpoly:
        mod = parse_dense(args.minpoly, QQ, args.param)
        try:
            return AlgebraicField(QQ, args.param, mod)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    return RationalFunctionField(args.param)


def run_crit(args, out) -> int:
    names = _variables(args.vars)
    if args.param in names:
        raise InputError("the field parameter must differ from the ring variables")
    K = _field(args)
    R = PolyRing(K, names)
    f = R.parse(args.poly)
    if args.chart is not None and not 1 <= args.chart <= len(names):
        raise InputError(f"chart must be between 1 and {len(names)}")
    results = analyze_with_splitting(f, chart=args.chart, generic_change=args.generic_change)
    job = {"command": "crit", "vars": list(names), "param": args.param, "minpoly": args.minpoly,
           "poly": args.poly, "chart": args.chart, "generic_change": args.generic_change}
    if args.json:
        doc = {"input": job}
        if len(results) == 1:
            doc.update(crit_to_dict(results[0][1]))
        else:
            doc["branches"] = [crit_to_dict(r) for _, r in results]
        out.write(to_json(doc))
    else:
        for F, r in results:
            if len(results) > 1:
                out.write(f"Over {F!r} :\n")
            out.write(format_crit(r))
    return EXIT_OK


def run_parcrit(args, out) -> int:
    names = _variables(args.vars)
    s = args.family_param
    if s in names:
        raise InputError("the family parameter must differ from the ring variables")
    F = FamilySpec.parse(args.poly, names, s)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegreeNotConstant)
        report = par_crit(F)
    if args.json:
        job = {"command": "parcrit", "vars": list(names), "family_param": s, "poly": args.poly}
        doc = {"input": job}
        doc.update(parcrit_to_dict(report))
        out.write(to_json(doc))
    else:
        out.write(format_parcrit(report))
    return EXIT_OK


def main(argv=None) -> int:
    out = sys.stdout
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                            format="%(name)s: %(message)s")
        if args.command == "crit":
            return run_crit(args, out)
        return run_parcrit(args, out)
    except (InputError, ParseError) as exc:
        print(f"critinf: input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except HypothesisViolation as exc:
        print(f"critinf: hypothesis violated ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS


if __name__ == "__main__":
    sys.exit(main())
