"""Text and JSON renderings of crit and par_crit results.

Polynomials are printed as content-free integer multiples with a positive
leading coefficient, so the monic ``t^2+16/3*t`` prints as ``3t2+16t``.
"""

from __future__ import annotations

import json
from functools import reduce
from math import gcd

from gmpy2 import mpq

from . import upoly
from .crit import CritReport
from .family import ParCritReport
from .fields import RationalFunctionField
from .poly import Polynomial

__all__ = [
    "primitive_form",
    "crit_to_dict",
    "parcrit_to_dict",
    "format_crit",
    "format_parcrit",
    "to_json",
]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _rationals(c) -> list:
    """All rational numbers appearing in a coefficient."""
    if hasattr(c, "num"):
        return list(c.num)
    if hasattr(c, "residue"):
        return list(c.residue)
    return [mpq(c)]


def _leading_rational(c):
    rs = [r for r in _rationals(c) if r]
    return rs[-1] if rs else mpq(0)


def primitive_form(p: Polynomial) -> Polynomial:
    """Integer-coefficient, content-free multiple of ``p`` with positive leading coefficient."""
    if not p:
        return p
    K = p.ring.field
    if isinstance(K, RationalFunctionField):
        den: tuple = (mpq(1),)
        for c in p.terms.values():
            den = upoly.monic(upoly.exquo(upoly.mul(den, c.den), upoly.gcd(den, c.den)))
        p = p.scale(K.from_dense(den))
        g: tuple = ()
        for c in p.terms.values():
            g = upoly.gcd(g, c.num) if g else upoly.monic(c.num)
        if len(g) > 1:
            p = p.scale(K.from_dense((mpq(1),), g))
    rs = [r for c in p.terms.values() for r in _rationals(c) if r]
    L = reduce(_lcm, (int(r.denominator) for r in rs), 1)
    G = reduce(gcd, (int(r.numerator) for r in rs), 0)
    scale = mpq(L, G or 1)
    lt = _leading_rational(p.leading_coefficient())
    if lt * scale < 0:
        scale = -scale
    return p.scale(K.convert(scale))


def _machine(p: Polynomial) -> str:
    return str(primitive_form(p))


def _report(p: Polynomial) -> str:
    return primitive_form(p).report_str()


def _field_name(K) -> str:
    return repr(K)


def _ordered(rows):
    """Detail rows sorted by degree, then number of terms, then text."""
    def key(row):
        q = primitive_form(row[0])
        return (q.degree(), len(q.terms), str(q))
    return sorted(rows, key=key)


def crit_to_dict(report: CritReport) -> dict:
    a, inf = report.affine, report.infinity
    out = {
        "hypotheses": dict(report.hypotheses),
        "affine": {
            "roots_of": _machine(a.baff_poly),
            "mu": a.mu,
            "details": [{"factor": _machine(p), "mu": v} for p, v in _ordered(a.mu_details)],
        },
        "infinity": {
            "roots_of": _machine(inf.binf_poly),
            "lambda": inf.lam,
            "details": [{"factor": _machine(p), "lambda": v} for p, v in _ordered(inf.lambda_details)],
            "chart": inf.chart_used,
        },
        "multi_integer": list(report.multi_integer),
        "sphere_counts": [{"factor": _machine(p), "count": v} for p, v in _ordered(report.sphere_counts)],
        "generic_spheres": report.generic_spheres,
    }
    if inf.coverage_warning:
        out["infinity"]["warning"] = inf.coverage_warning
    if report.field is not None:
        out["field"] = _field_name(report.field)
    if report.change is not None:
        out["change"] = report.change
    return out


def parcrit_to_dict(report: ParCritReport) -> dict:
    return {
        "sprime_roots_of": _machine(report.sprime_poly),
        "components": {k: _machine(v) for k, v in report.components.items()},
        "degree_constant": report.degree_constant,
        "notes": list(report.notes),
    }


def _table(rows: list[tuple[str, int]]) -> list[str]:
    width = max([8] + [len(r) + 3 for r, _ in rows])
    return [f"  {r.ljust(width)}{v}" for r, v in rows]


def format_crit(report: CritReport) -> str:
    a, inf = report.affine, report.infinity
    lines = [
        f"Affine critical values are the roots of {_report(a.baff_poly)}",
        f"Affine Milnor number : {a.mu}",
    ]
    if a.mu_details:
        lines.append("Details of affine critical values :")
        lines += _table([(_report(p), v) for p, v in _ordered(a.mu_details)])
    lines += [
        f"Critical values at infinity are the roots of {_report(inf.binf_poly)}",
        f"Milnor number at infinity : {inf.lam}",
    ]
    if inf.lambda_details:
        lines.append("Details of critical values at infinity :")
        lines += _table([(_report(p), v) for p, v in _ordered(inf.lambda_details)])
        lines.append(f"Chart used at infinity : x{inf.chart_used}=1")
    if inf.coverage_warning:
        lines.append(f"Warning : {inf.coverage_warning}")
    mi = report.multi_integer
    lines.append("Milnor multi-integer : (" + ",".join(str(v) for v in mi) + ")")
    lines.append(f"Spheres in the generic fiber : {report.generic_spheres}")
    if report.sphere_counts:
        lines.append("Spheres in the irregular fibers :")
        lines += _table([(_report(p), v) for p, v in _ordered(report.sphere_counts)])
    if report.change is not None:
        lines.append(f"Linear change applied : {report.change}")
    return "\n".join(lines) + "\n"


def format_parcrit(report: ParCritReport) -> str:
    lines = [f"Critical parameters are included in the roots of {_report(report.sprime_poly)}"]
    lines.append("Components :")
    lines += _table([(k, _report(v)) for k, v in report.components.items()])
    for note in report.notes:
        lines.append(f"Note : {note}")
    return "\n".join(lines) + "\n"


def to_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
