"""One-parameter families ``f_s`` and the parameters where their topology may jump.

A family is a polynomial in ``QQ[x_1..x_n, s]``.  The generic member is
analyzed over ``QQ(s)``; every set where the multi-integer of ``f_s`` can
change is then a finite set of parameters cut out by a polynomial in ``s``:

* ``escape``: affine critical points run off to infinity,
* ``baff_jump`` / ``binf_jump`` / ``card_b_jump``: critical values collide
  or escape (leading coefficient and discriminant in ``t``),
* ``lambda_jump``: the polar curve at infinity degenerates on ``X_*``,
* ``degree_drop``: the top-degree part of ``f_s`` vanishes.

``par_crit`` multiplies all of them.  Outside the roots of the product the
multi-integer is constant.
"""

from __future__ import annotations

import logging
import os
import random
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import upoly
from .crit import (
    Analyzer,
    HypothesisViolation,
    NonIsolatedAffineSingularities,
    analyze,
    _fresh,
)
from .fields import QQ, RationalField, RationalFunctionField, mpq
from .groebner import INFINITE, Ideal
from .ideals import eliminate, homogenize_ideal, saturate, univariate_eliminant
from .poly import Polynomial, PolyRing

__all__ = [
    "FamilySpec",
    "ParCritReport",
    "GenericNonIsolated",
    "DegreeNotConstant",
    "affine_escape_parameters",
    "baff_jump_parameters",
    "binf_jump_parameters",
    "card_b_jump_parameters",
    "lambda_jump_parameters",
    "degree_drop_parameters",
    "par_crit",
    "member_multi_integer",
    "workers",
]

log = logging.getLogger(__name__)


class GenericNonIsolated(HypothesisViolation):
    """The generic member of the family has non-isolated singularities."""


class DegreeNotConstant(UserWarning):
    """The degree of ``f_s`` drops at some parameter values."""


@dataclass(frozen=True)
class FamilySpec:
    """A polynomial ``f`` over ``QQ`` in the variables ``xs + (param,)``."""

    f: Polynomial
    param: str = "s"

    def __post_init__(self):
        if not isinstance(self.f.ring.field, RationalField):
            raise ValueError("family coefficients must be rational")
        if self.param not in self.f.ring.index:
            raise ValueError(f"parameter {self.param} is not a ring variable")

    @classmethod
    def parse(cls, text: str, variables, param: str = "s") -> "FamilySpec":
        R = PolyRing(QQ, tuple(variables) + (param,))
        return cls(R.parse(text), param)

    @property
    def xs(self) -> tuple[str, ...]:
        return tuple(v for v in self.f.ring.variables if v != self.param)

    @property
    def n(self) -> int:
        return len(self.xs)

    @property
    def weights(self) -> list[int]:
        return [0 if v == self.param else 1 for v in self.f.ring.variables]

    @property
    def degree(self) -> int:
        """Degree in ``x`` of the generic member."""
        return self.f.weighted_degree(self.weights)

    def generic(self) -> Polynomial:
        """The family as a polynomial over ``QQ(s)``."""
        K = RationalFunctionField(self.param)
        R = PolyRing(K, self.xs)
        si = self.f.ring.index[self.param]
        terms: dict = {}
        for e, c in self.f.terms.items():
            x = e[:si] + e[si + 1:]
            num = (mpq(0),) * e[si] + (mpq(c),)
            terms[x] = terms.get(x, K.zero) + K.from_dense(num)
        return Polynomial(R, {e: c for e, c in terms.items() if c})

    def specialize(self, value) -> Polynomial:
        """The member ``f_{s0}`` as a polynomial over ``QQ``."""
        R = PolyRing(QQ, self.xs)
        g = self.f.substitute({self.param: self.f.ring.constant(value)})
        return g.embed(R)


@dataclass
class ParCritReport:
    family: FamilySpec
    sprime_poly: Polynomial
    components: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    degree_constant: bool = True


# -- helpers -----------------------------------------------------------------


def _s_ring(F: FamilySpec) -> PolyRing:
    return PolyRing(QQ, (F.param,))


def _s_poly(F: FamilySpec, d: tuple) -> Polynomial:
    return Polynomial.from_dense(_s_ring(F), d or (mpq(0),), 0)


def _sqfree(d: tuple) -> tuple:
    if len(d) <= 1:
        return (mpq(1),)
    return upoly.squarefree_part(d)


def _lcm(a: tuple, b: tuple) -> tuple:
    return upoly.monic(upoly.exquo(upoly.mul(a, b), upoly.gcd(a, b)))


def _clear(p: tuple, K: RationalFunctionField) -> list[tuple]:
    """Coefficients in ``QQ[s]`` of a primitive multiple of ``p`` over ``QQ(s)``."""
    p = [K.convert(c) for c in p]
    den: tuple = (mpq(1),)
    for c in p:
        den = _lcm(den, c.den)
    nums = [upoly.mul(c.num, upoly.exquo(den, c.den)) for c in p]
    g: tuple = ()
    for q in nums:
        g = upoly.gcd(g, q) if g else upoly.monic(q) if q else g
    if g and len(g) > 1:
        nums = [upoly.exquo(q, g) if q else q for q in nums]
    return nums


def _value_locus(p: tuple, K: RationalFunctionField) -> tuple:
    """Parameters where the roots of ``p(t)`` (over ``QQ(s)``) collide or escape.

    Leading coefficient times discriminant of a primitive multiple of ``p``.
    """
    if len(p) <= 1:
        return (mpq(1),)
    coeffs = _clear(p, K)
    lc = coeffs[-1]
    acc = _sqfree(lc)
    if len(coeffs) > 2:
        P = tuple(K.from_dense(c) if c else K.zero for c in coeffs)
        res = upoly.resultant(P, upoly.deriv(P))
        disc = res / K.from_dense(lc)
        acc = upoly.mul(acc, upoly.mul(_sqfree(disc.num), _sqfree(disc.den)))
    return _sqfree(acc)


def _generic_analyzer(F: FamilySpec) -> Analyzer:
    A = Analyzer(F.generic())
    try:
        A.affine_milnor_number()
    except NonIsolatedAffineSingularities as exc:
        raise GenericNonIsolated(f"generic member: {exc}") from exc
    iso, _ = A.check_infinity_hypotheses()
    if not iso:
        raise GenericNonIsolated("generic member has non-isolated singularities at infinity")
    return A


def _big_ring(F: FamilySpec, extra: tuple[str, ...]) -> tuple[PolyRing, list[str]]:
    taken = set(F.f.ring.variables)
    names = []
    for e in extra:
        nm = _fresh(e, taken)
        taken.add(nm)
        names.append(nm)
    return PolyRing(QQ, F.xs + (F.param,) + tuple(names)), names


# -- the individual loci -----------------------------------------------------


def affine_escape_parameters(F: FamilySpec) -> Polynomial:
    """Parameters where affine critical points of ``f_s`` go to infinity.

    The critical locus ``{grad_x f = 0}`` is closed in ``P^n x A^1`` and its
    points on the hyperplane at infinity are projected to the ``s``-line,
    one chart ``x_j = 1`` at a time.
    """
    return _s_poly(F, _escape(F))


def _escape(F: FamilySpec) -> tuple:
    W, (zn,) = _big_ring(F, ("z",))
    f = F.f.embed(W)
    n = F.n
    si = W.index[F.param]
    z = W.gen(zn)
    w = [1] * n + [0, 0]
    J = Ideal(W, [f.derivative(i) for i in range(n)])
    if J.groebner().is_unit():
        return (mpq(1),)
    Jbar = homogenize_ideal(J, zn, w)
    Jaff = saturate(Jbar, z)
    acc: tuple = (mpq(1),)
    for j in range(n):
        g = univariate_eliminant(Jaff + [z, W.gens[j] - 1], si)
        if not g:
            raise GenericNonIsolated(
                "critical points of the generic member reach infinity over every parameter")
        acc = upoly.mul(acc, g)
    return _sqfree(acc)


def baff_jump_parameters(F: FamilySpec, A: Analyzer | None = None) -> Polynomial:
    A = A or _generic_analyzer(F)
    return _s_poly(F, _value_locus(A.affine_critical_values(), A.K))


def binf_jump_parameters(F: FamilySpec, A: Analyzer | None = None) -> Polynomial:
    A = A or _generic_analyzer(F)
    return _s_poly(F, _value_locus(A.critical_values_at_infinity(), A.K))


def card_b_jump_parameters(F: FamilySpec, A: Analyzer | None = None) -> Polynomial:
    A = A or _generic_analyzer(F)
    b = upoly.squarefree_part(upoly.mul(A.affine_critical_values(), A.critical_values_at_infinity()))
    return _s_poly(F, _value_locus(b, A.K))


def degree_drop_parameters(F: FamilySpec) -> Polynomial:
    """gcd over the ``x``-monomials of the coefficients of the top form."""
    return _s_poly(F, _degree_drop(F))


def _degree_drop(F: FamilySpec) -> tuple:
    top = dict(F.f.homogeneous_parts(F.weights))[F.degree]
    si = F.f.ring.index[F.param]
    coeffs: dict = {}
    for e, c in top.terms.items():
        x = e[:si] + e[si + 1:]
        d = coeffs.setdefault(x, {})
        d[e[si]] = c
    g: tuple = ()
    for d in coeffs.values():
        dense = upoly.trim([mpq(d.get(k, 0)) for k in range(max(d) + 1)])
        g = upoly.gcd(g, dense) if g else upoly.monic(dense)
    return _sqfree(g)


def lambda_jump_parameters(F: FamilySpec, A: Analyzer | None = None) -> Polynomial:
    """Parameters where the polar curves at infinity meet ``X_*`` badly.

    For each chart ``x_k = 1`` the curve ``C_k`` is built with ``s`` as a
    variable; ``X_*`` is cut out by the elimination ideal of ``C_k ∩ {z=0}``
    in ``(t, s)``.  The points of ``sat(C_k + X_*, z) ∩ {z = 0}`` project to
    the parameters where the local intersection numbers can change.
    """
    return _s_poly(F, _lambda_jump(F))


def _lambda_jump(F: FamilySpec) -> tuple:
    W, (zn, tn) = _big_ring(F, ("z", "t"))
    n = F.n
    d = F.degree
    si = W.index[F.param]
    zi = W.index[zn]
    z = W.gen(zn)
    t = W.gen(tn)
    f = F.f.embed(W)
    w = [1] * n + [0, 0, 0]
    X = f.homogenize(zi, w, d) - t * z ** d
    Rz = PolyRing(QQ, F.xs + (F.param, zn))
    fz = F.f.embed(Rz)
    wz = [1] * n + [0, 0]
    acc: tuple = (mpq(1),)
    for k in range(n):
        P = Ideal(Rz, [fz.derivative(i) for i in range(n) if i != k])
        Pbar = [g.embed(W) for g in homogenize_ideal(P, zn, wz).gens] if P.gens else []
        Cbar = Ideal(W, [W.gens[k] - 1] + Pbar + [X])
        C = saturate(Cbar, z)
        Cinf = C + [z]
        if Cinf.groebner().is_unit():
            continue
        keep = {si, W.index[tn]}
        E = eliminate(Cinf, [i for i in range(W.nvars) if i not in keep])
        L = saturate(C + list(E.gens), z) + [z]
        if L.groebner().is_unit():
            continue
        g = univariate_eliminant(L, si)
        if not g:
            raise GenericNonIsolated(
                f"polar curve of x{k + 1} degenerates at infinity over every parameter")
        acc = upoly.mul(acc, g)
    return _sqfree(acc)


# -- driver -----------------------------------------------------------------


def _check_member(F: FamilySpec, rng: random.Random) -> None:
    """Hypotheses at a random rational member (cheap sanity check)."""
    s0 = mpq(rng.randint(-10**6, 10**6), rng.randint(1, 1000))
    member = F.specialize(s0)
    A = Analyzer(member)
    if A.jacobian().vdim() == INFINITE:
        raise GenericNonIsolated(f"member s={s0} has non-isolated affine singularities")
    if not A.check_infinity_hypotheses()[0]:
        raise GenericNonIsolated(f"member s={s0} has non-isolated singularities at infinity")


def _generic_loci(F: FamilySpec) -> dict:
    A = _generic_analyzer(F)
    b = A.affine_critical_values()
    e = A.critical_values_at_infinity()
    return {
        "baff_jump": _value_locus(b, A.K),
        "binf_jump": _value_locus(e, A.K),
        "card_b_jump": _value_locus(upoly.squarefree_part(upoly.mul(b, e)), A.K),
    }


def _task(name: str, F: FamilySpec):
    if name == "generic":
        return _generic_loci(F)
    return {name: _TASKS[name](F)}


_TASKS = {"escape": _escape, "lambda_jump": _lambda_jump, "degree_drop": _degree_drop}
_ORDER = ("escape", "baff_jump", "binf_jump", "lambda_jump", "degree_drop", "card_b_jump")


def workers() -> int:
    """Worker processes allowed by ``CRITINF_THREADS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("CRITINF_THREADS", "1")))
    except ValueError:
        return 1


def par_crit(F: FamilySpec, seed: int = 0) -> ParCritReport:
    """Polynomial in ``s`` whose roots contain every parameter where the
    topology of ``f_s`` can change.

    The components are independent; with ``CRITINF_THREADS > 1`` they run in
    separate processes.  The result does not depend on the worker count.
    """
    _check_member(F, random.Random(seed))
    names = ["generic", "escape", "lambda_jump", "degree_drop"]
    found: dict = {}
    nw = min(workers(), len(names))
    if nw > 1:
        with ProcessPoolExecutor(max_workers=nw) as pool:
            for part in pool.map(_task, names, [F] * len(names)):
                found.update(part)
    else:
        for name in names:
            found.update(_task(name, F))
    comps = {k: found[k] for k in _ORDER}
    acc: tuple = (mpq(1),)
    for v in comps.values():
        acc = upoly.mul(acc, v)
    sprime = _sqfree(acc)
    report = ParCritReport(F, _s_poly(F, sprime), {k: _s_poly(F, v) for k, v in comps.items()})
    if len(comps["degree_drop"]) > 1:
        report.degree_constant = False
        msg = f"the degree of f_{F.param} drops at the roots of {report.components['degree_drop']}"
        report.notes.append(msg)
        warnings.warn(msg, DegreeNotConstant, stacklevel=2)
    if len(sprime) == 1 and report.degree_constant:
        if F.n != 3:
            report.notes.append(
                "no critical parameters and constant degree: all members of the family "
                "are topologically equivalent")
        else:
            report.notes.append(
                "no critical parameters and constant degree: the multi-integer is constant, "
                "but topological equivalence is not guaranteed for n = 3")
    log.debug("par_crit components: %s", report.components)
    return report


def member_multi_integer(F: FamilySpec, value):
    """Multi-integer of the member ``f_value`` (used to probe completeness)."""
    return analyze(F.specialize(value)).multi_integer
