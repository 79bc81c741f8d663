"""Affine and at-infinity singularity data of a polynomial map ``f : K^n -> K``.

Affine part: the Milnor number ``mu`` is the dimension of the Jacobian
quotient.  The critical values are the ``t``-eliminant of
``(f - t, grad f)``; the Milnor number of a fiber is read off the
stabilized dimension of ``J + ((f - c)^k)``.

At infinity the polar curve ``{df/dx_i = 0, i != k}`` is homogenized and
intersected with ``X = {fbar - t z^d = 0}`` in the chart ``x_k = 1``.
Saturating by ``z`` drops its part inside the hyperplane at infinity.  Its
points at ``z = 0`` project to the critical values at infinity, and the
local intersection numbers with the fibers ``t = c`` (the stabilized
dimension of ``C + (t - c) + (z^q)``) give the Milnor numbers at infinity.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import NamedTuple

from . import upoly
from .fields import AlgebraicField, Field, RationalField, ZeroDivisor
from .groebner import INFINITE, Ideal
from .ideals import homogenize_ideal, saturate, stabilized_vdim, univariate_eliminant
from .poly import Polynomial, PolyRing, factor_squarefree

__all__ = [
    "HypothesisViolation",
    "NonIsolatedAffineSingularities",
    "NonIsolatedInfinitySingularities",
    "ChartCoverageFailure",
    "AffineReport",
    "InfinityReport",
    "MilnorMultiInteger",
    "CritReport",
    "Analyzer",
    "affine_milnor_number",
    "affine_critical_values",
    "fiber_milnor_number",
    "polar_curve",
    "curve_at_infinity",
    "critical_values_at_infinity",
    "lambda_at_value",
    "analyze",
    "generic_linear_change",
    "random_affine_change",
    "analyze_with_splitting",
]

log = logging.getLogger(__name__)


class HypothesisViolation(ValueError):
    """A standing hypothesis on ``f`` fails; the message names it."""


class NonIsolatedAffineSingularities(HypothesisViolation):
    pass


class NonIsolatedInfinitySingularities(HypothesisViolation):
    pass


class ChartCoverageFailure(HypothesisViolation):
    pass


# -- report types -------------------------------------------------------------


@dataclass(frozen=True)
class AffineReport:
    baff_poly: Polynomial
    mu: int
    mu_details: list


@dataclass(frozen=True)
class InfinityReport:
    binf_poly: Polynomial
    lam: int
    lambda_details: list
    chart_used: int | None
    coverage_warning: str | None = None


class MilnorMultiInteger(NamedTuple):
    mu: int
    card_baff: int
    lam: int
    card_binf: int
    card_b: int


@dataclass(frozen=True)
class CritReport:
    affine: AffineReport
    infinity: InfinityReport
    multi_integer: MilnorMultiInteger
    sphere_counts: list
    generic_spheres: int
    hypotheses: dict = field(default_factory=dict)
    field: Field | None = None
    change: list | None = None


# -- helpers ------------------------------------------------------------------


def _fresh(name: str, taken) -> str:
    while name in taken:
        name += "_"
    return name


def t_ring(field: Field, name: str = "t") -> PolyRing:
    if field.param == name:
        name = "t_"
    return PolyRing(field, (name,))


def _eliminant(I: Ideal, var_index: int) -> tuple:
    return univariate_eliminant(I, var_index)


def split_factors(p: tuple, field: Field) -> list[tuple]:
    """Monic, squarefree, pairwise coprime factors covering the roots of ``p``.

    Over QQ rational roots are split off; other factors are kept whole and
    may be split later by the zero-divisor mechanism.
    """
    if len(p) < 2:
        return []
    if isinstance(field, RationalField):
        R = PolyRing(field, ("t",))
        return [f.to_dense(0) for f, _ in factor_squarefree(Polynomial.from_dense(R, p, 0))]
    return [upoly.squarefree_part(p)]


def refine(factor_lists: list[list[tuple]]) -> list[tuple]:
    """Coprime refinement: pieces whose roots partition the union of roots."""
    pieces: list[tuple] = []
    for fl in factor_lists:
        for f in fl:
            new = []
            rest = f
            for q in pieces:
                g = upoly.gcd(q, rest)
                if len(g) > 1:
                    a = upoly.monic(upoly.exquo(q, g))
                    rest = upoly.monic(upoly.exquo(rest, g))
                    new.append(g)
                    if len(a) > 1:
                        new.append(a)
                else:
                    new.append(q)
            if len(rest) > 1:
                new.append(rest)
            pieces = new
    return pieces


class RootContext:
    """A root ``c`` of a monic factor: a field element of K or of K[c]/(p)."""

    def __init__(self, factor: tuple, field: Field, taken=()):
        self.factor = factor
        self.base = field
        if len(factor) == 2:
            self.field = field
            self.value = -factor[0]
        else:
            name = _fresh("c_", set(taken) | {field.param})
            self.field = AlgebraicField(field, name, factor)
            self.value = self.field.gen()


def _lift(p: Polynomial, ring: PolyRing) -> Polynomial:
    return p.embed(ring)


def _dense_divides(a: tuple, b: tuple) -> bool:
    return not upoly.rem(b, a)


# -- the analyzer -------------------------------------------------------------


class Analyzer:
    """Caches the ideals shared by the individual operations on one ``f``."""

    def __init__(self, f: Polynomial):
        if f.is_constant():
            raise HypothesisViolation("f must be non-constant")
        self.f = f
        self.R = f.ring
        self.K = f.ring.field
        self.n = f.ring.nvars
        self.d = f.degree()
        names = set(self.R.variables)
        self.zname = _fresh("z", names | {self.K.param})
        self.tname = _fresh("t", names | {self.K.param, self.zname})
        self.W = PolyRing(self.K, self.R.variables + (self.zname, self.tname))
        self.RT = PolyRing(self.K, self.R.variables + (self.tname,))
        self.T = t_ring(self.K)
        self._charts: dict[int, Ideal] = {}
        self._Cinf_poly: dict[int, tuple] = {}
        self._coverage: dict[int, tuple] = {}

    # affine ---------------------------------------------------------------

    def jacobian(self, ring: PolyRing | None = None) -> Ideal:
        f = self.f if ring is None else _lift(self.f, ring)
        return Ideal(f.ring, [f.derivative(i) for i in range(self.n)])

    def affine_milnor_number(self) -> int:
        v = self.jacobian().vdim()
        if v == INFINITE:
            raise NonIsolatedAffineSingularities(
                "affine singularities are not isolated (Jacobian quotient is infinite dimensional)")
        return int(v)

    def affine_critical_values(self) -> tuple:
        """Dense monic squarefree polynomial in t whose roots are B_aff."""
        mu = self.affine_milnor_number()
        if mu == 0:
            return (self.K.one,)
        f = _lift(self.f, self.RT)
        t = self.RT.gen(self.tname)
        I = Ideal(self.RT, [f - t] + [f.derivative(i) for i in range(self.n)])
        g = _eliminant(I, self.n)
        return upoly.squarefree_part(g)

    def fiber_milnor_number_at(self, root: RootContext) -> int:
        ring = self.R.with_field(root.field) if root.field is not self.K else self.R
        f = _lift(self.f, ring)
        J = Ideal(ring, [f.derivative(i) for i in range(self.n)])
        if J.groebner().vdim() == INFINITE:
            raise NonIsolatedAffineSingularities("affine singularities are not isolated")
        _, dim = stabilized_vdim(J, f - ring.constant(root.value))
        return dim

    # at infinity ------------------------------------------------------------

    def check_infinity_hypotheses(self) -> tuple[bool, bool]:
        """``(isolated, strong)`` for the singular loci at infinity."""
        parts = dict(self.f.homogeneous_parts())
        top = parts[self.d]
        sub = parts.get(self.d - 1, self.R.zero())
        grads = [top.derivative(i) for i in range(self.n)]
        dim_sigma = Ideal(self.R, grads + [sub]).groebner().dimension()
        dim_strong = Ideal(self.R, grads).groebner().dimension()
        # affine cones: a finite projective set has cone dimension <= 1
        return dim_sigma <= 1, dim_strong <= 1

    def X(self) -> Polynomial:
        f = _lift(self.f, self.W)
        z = self.W.gen(self.zname)
        t = self.W.gen(self.tname)
        zi = self.W.index[self.zname]
        w = [1] * self.n + [0, 0]
        return f.homogenize(zi, w, self.d) - t * z ** self.d

    def polar_ideal(self, k: int) -> Ideal:
        return Ideal(self.R, [self.f.derivative(i) for i in range(self.n) if i != k])

    def _homogenized_polar(self, k: int) -> list[Polynomial]:
        Rz = PolyRing(self.K, self.R.variables + (self.zname,))
        P = self.polar_ideal(k).embed(Rz)
        return [g.embed(self.W) for g in homogenize_ideal(P, self.zname).gens]

    def chart_curve(self, k: int, chart: int | None = None) -> Ideal:
        """Polar curve for ``x_k`` in the chart ``x_chart = 1``, saturated by z."""
        chart = k if chart is None else chart
        key = (k, chart)
        if key not in self._charts:
            W = self.W
            X = self.X()
            z = W.gen(self.zname)
            Cbar = Ideal(W, [W.gens[chart] - 1] + self._homogenized_polar(k) + [X])
            C = saturate(Cbar, Ideal(W, [z, X]))
            self._charts[key] = Ideal(W, C.groebner().elements)
        return self._charts[key]

    def curve_at_infinity(self, k: int) -> tuple[Ideal, Ideal]:
        C = self.chart_curve(k)
        z = self.W.gen(self.zname)
        return C, C + [z]

    def binf_chart(self, k: int) -> tuple:
        if k not in self._Cinf_poly:
            _, Cinf = self.curve_at_infinity(k)
            g = _eliminant(Cinf, self.n + 1)
            if not g:
                raise NonIsolatedInfinitySingularities(
                    f"polar curve of x{k + 1} meets infinity over every value of t")
            self._Cinf_poly[k] = upoly.squarefree_part(g)
        return self._Cinf_poly[k]

    def critical_values_at_infinity(self) -> tuple:
        iso, _ = self.check_infinity_hypotheses()
        if not iso:
            raise NonIsolatedInfinitySingularities("singularities at infinity are not isolated")
        acc: tuple = (self.K.one,)
        for k in range(self.n):
            acc = upoly.mul(acc, self.binf_chart(k))
        return upoly.squarefree_part(acc)

    def uncovered_values(self, k: int) -> tuple:
        """t-polynomial vanishing where the polar curve of ``x_k`` has points
        at infinity with ``x_k = 0`` (invisible in the chart ``x_k = 1``)."""
        if k not in self._coverage:
            acc: tuple = (self.K.one,)
            z = self.W.gen(self.zname)
            xk = self.W.gens[k]
            for j in range(self.n):
                if j == k:
                    continue
                C = self.chart_curve(k, j)
                g = _eliminant(C + [z, xk], self.n + 1)
                if not g:
                    self._coverage[k] = ()
                    return ()
                acc = upoly.mul(acc, g)
            self._coverage[k] = upoly.squarefree_part(acc)
        return self._coverage[k]

    def chart_covers(self, k: int, factor: tuple) -> bool:
        """The chart ``x_k = 1`` sees the polar curve of ``x_k`` over every root
        of ``factor`` and none of its points at infinity there has ``x_k = 0``."""
        if len(upoly.gcd(self.binf_chart(k), factor)) != len(factor):
            return False
        u = self.uncovered_values(k)
        if not u:
            return False
        return len(upoly.gcd(u, factor)) == 1

    def lambda_at(self, root: RootContext, k: int) -> int:
        C = self.chart_curve(k)
        if root.field is not self.K:
            W = self.W.with_field(root.field)
            C = Ideal(W, [g.embed(W) for g in C.gens])
        else:
            W = self.W
        t = W.gen(self.tname)
        z = W.gen(self.zname)
        base = C + [t - W.constant(root.value)]
        _, dim = stabilized_vdim(base, z)
        return dim


# -- per-root evaluation with dynamic splitting --------------------------------


def per_root(fn, factor: tuple, field: Field, taken=()) -> list[tuple[tuple, int]]:
    """Evaluate ``fn(root)`` on a root of ``factor``; split on zero divisors."""
    root = RootContext(factor, field, taken)
    try:
        return [(factor, fn(root))]
    except ZeroDivisor as exc:
        if not isinstance(root.field, AlgebraicField) or exc.field != root.field:
            raise
        out = []
        for piece in exc.branches():
            out.extend(per_root(fn, piece, field, taken))
        return out


def _dense_to_t(p: tuple, T: PolyRing) -> Polynomial:
    return Polynomial.from_dense(T, p, 0)


# -- functional API -----------------------------------------------------------


def affine_milnor_number(f: Polynomial) -> int:
    return Analyzer(f).affine_milnor_number()


def affine_critical_values(f: Polynomial) -> Polynomial:
    A = Analyzer(f)
    return _dense_to_t(A.affine_critical_values(), A.T)


def fiber_milnor_number(f: Polynomial, c) -> int:
    """``mu_c`` for a value ``c`` given as a field element or a monic factor.

    A factor is a univariate polynomial in t (dense tuple or Polynomial);
    the value is then per root of that factor.
    """
    A = Analyzer(f)
    factor = _root_factor(c, A.K)
    res = per_root(A.fiber_milnor_number_at, factor, A.K, A.R.variables)
    return _single_value(res)


def _root_factor(c, K) -> tuple:
    if isinstance(c, Polynomial):
        return upoly.monic(c.to_dense())
    if isinstance(c, tuple):
        return upoly.monic(c)
    return (-K.convert(c), K.one)


def _single_value(res):
    vals = {v for _, v in res}
    if len(vals) != 1:
        raise ValueError(f"roots of the factor disagree: {res}")
    return vals.pop()


def polar_curve(f: Polynomial, k: int) -> Ideal:
    """Ideal of the polar curve of ``(f, x_k)`` (``k`` is 1-based)."""
    return Analyzer(f).polar_ideal(k - 1)


def curve_at_infinity(f: Polynomial, k: int) -> tuple[Ideal, Ideal]:
    return Analyzer(f).curve_at_infinity(k - 1)


def critical_values_at_infinity(f: Polynomial) -> Polynomial:
    A = Analyzer(f)
    return _dense_to_t(A.critical_values_at_infinity(), A.T)


def lambda_at_value(f: Polynomial, c, k: int | None = None) -> int:
    """``lambda_c`` computed in the chart ``x_k = 1`` (1-based; default n)."""
    A = Analyzer(f)
    k = (k or A.n) - 1
    factor = _root_factor(c, A.K)
    if len(upoly.gcd(factor, A.critical_values_at_infinity())) == 1:
        # no root of the factor is a critical value at infinity
        return 0
    if not A.chart_covers(k, factor):
        raise ChartCoverageFailure(
            f"chart x{k + 1}=1 misses points of the polar curve at infinity over this value")
    return _single_value(per_root(lambda r: A.lambda_at(r, k), factor, A.K, A.W.variables))


# -- generic linear change ----------------------------------------------------


def generic_linear_change(f: Polynomial, seed: int) -> tuple[Polynomial, list[list[int]]]:
    """Apply a seeded random unimodular integer substitution ``x <- A x``."""
    rng = random.Random(seed)
    n = f.ring.nvars
    L = [[1 if i == j else (rng.randint(-2, 2) if j < i else 0) for j in range(n)] for i in range(n)]
    U = [[1 if i == j else (rng.randint(-2, 2) if j > i else 0) for j in range(n)] for i in range(n)]
    A = [[sum(L[i][k] * U[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    gens = f.ring.gens
    subs = {i: sum((gens[j].scale(A[i][j]) for j in range(n) if A[i][j]), f.ring.zero())
            for i in range(n)}
    return f.substitute(subs), A


def random_affine_change(f: Polynomial, seed: int) -> tuple[Polynomial, dict]:
    """Seeded sparse affine change: permute the variables, translate each by a
    small integer and add one shear ``x_i <- x_i + a*x_j``.

    Cheap enough to keep coefficient growth modest, while still moving the
    polynomial away from its original coordinates.
    """
    rng = random.Random(seed)
    n = f.ring.nvars
    gens = f.ring.gens
    perm = list(range(n))
    rng.shuffle(perm)
    shift = [rng.randint(-2, 2) for _ in range(n)]
    subs = {i: gens[perm[i]] + f.ring.constant(shift[i]) for i in range(n)}
    shear = None
    if n > 1:
        i, j = rng.sample(range(n), 2)
        a = rng.choice([-2, -1, 1, 2])
        subs[i] = subs[i] + gens[perm[j]].scale(a)
        shear = (i, j, a)
    return f.substitute(subs), {"perm": perm, "shift": shift, "shear": shear}


# -- full analysis ------------------------------------------------------------


def analyze(f: Polynomial, chart: int | None = None, generic_change: int | None = None) -> CritReport:
    """Full report: affine data, data at infinity, multi-integer, sphere counts.

    ``chart`` (1-based) forces the chart used for the Milnor numbers at
    infinity; otherwise ``x_n = 1`` is tried first, then ``x_{n-1}``, ...
    """
    change = None
    if generic_change is not None:
        f, change = generic_linear_change(f, generic_change)
    A = Analyzer(f)
    K = A.K
    taken = A.W.variables

    iso, strong = A.check_infinity_hypotheses()
    hyp = {"affine_isolated": True, "infinity_isolated": iso, "strong_infinity_isolated": strong}
    try:
        mu = A.affine_milnor_number()
    except NonIsolatedAffineSingularities:
        hyp["affine_isolated"] = False
        raise
    if not iso:
        raise NonIsolatedInfinitySingularities(
            "singularities at infinity are not isolated (Sigma is not finite)")

    baff = A.affine_critical_values()
    aff_factors = split_factors(baff, K)
    mu_details = []
    for p in aff_factors:
        mu_details.extend(per_root(A.fiber_milnor_number_at, p, K, taken))
    total = sum((len(p) - 1) * v for p, v in mu_details)
    if total != mu:
        raise AssertionError(f"sum of fiber Milnor numbers {total} != mu {mu}")

    binf = A.critical_values_at_infinity()
    inf_factors = split_factors(binf, K)
    lam_details: list = []
    chart_used = None
    warning = None
    if inf_factors:
        if chart is not None:
            order = [chart - 1]
        else:
            order = list(range(A.n - 1, -1, -1))
        for k in order:
            if all(A.chart_covers(k, p) for p in inf_factors):
                chart_used = k
                break
        if chart_used is None:
            if chart is None:
                raise ChartCoverageFailure(
                    "no coordinate chart sees all points of the polar curve at infinity; "
                    "retry with --generic-change SEED")
            chart_used = chart - 1
            warning = f"chart x{chart}=1 misses points at infinity; lambda may be undercounted"
        elif chart is None and chart_used != A.n - 1:
            warning = f"default chart x{A.n}=1 does not cover all points; used x{chart_used + 1}=1"
        k = chart_used
        for p in inf_factors:
            lam_details.extend(per_root(lambda r: A.lambda_at(r, k), p, K, taken))
    lam = sum((len(p) - 1) * v for p, v in lam_details)

    T = A.T
    affine = AffineReport(_dense_to_t(baff, T), mu, [(_dense_to_t(p, T), v) for p, v in mu_details])
    infinity = InfinityReport(_dense_to_t(binf, T), lam, [(_dense_to_t(p, T), v) for p, v in lam_details],
                              None if chart_used is None else chart_used + 1, warning)

    pieces = refine([[p for p, _ in mu_details], [p for p, _ in lam_details]])
    spheres = []
    for q in pieces:
        mu_c = sum(v for p, v in mu_details if _dense_divides(q, p))
        lam_c = sum(v for p, v in lam_details if _dense_divides(q, p))
        spheres.append((_dense_to_t(q, T), mu + lam - mu_c - lam_c))
    b_all = upoly.squarefree_part(upoly.mul(baff, binf))
    mi = MilnorMultiInteger(mu, len(baff) - 1, lam, len(binf) - 1, len(b_all) - 1)
    return CritReport(affine, infinity, mi, spheres, mu + lam, hyp, K, change)


def analyze_with_splitting(f: Polynomial, **kw) -> list[tuple[Field, CritReport]]:
    """Run :func:`analyze`; over an extension field, split on zero divisors."""
    K = f.ring.field
    if not isinstance(K, AlgebraicField):
        return [(K, analyze(f, **kw))]

    def run(field):
        return analyze(f.embed(f.ring.with_field(field)) if field != K else f, **kw)

    out = []
    stack = [K]
    while stack:
        F = stack.pop()
        try:
            out.append((F, run(F)))
        except ZeroDivisor as exc:
            if exc.field != F:
                raise
            for piece in exc.branches():
                stack.append(F.split(piece))
    return out

