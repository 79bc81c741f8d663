"""Sparse multivariate polynomials over exact fields, with univariate helpers.

Polynomials are dictionaries from exponent tuples to nonzero coefficients.
Orders are not baked into the storage: every order is described by a
nonnegative integer weight matrix, and comparing monomials means comparing
the vectors ``M @ e`` lexicographically.  The Gröbner kernel reuses those
matrices to pack monomials into plain integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

from . import upoly
from .fields import Field, RationalField
from .printing import join_terms

__all__ = [
    "MonomialOrder",
    "DegRevLex",
    "Lex",
    "Block",
    "DP",
    "LEX",
    "PolyRing",
    "Polynomial",
    "univ_gcd",
    "squarefree_part",
    "discriminant",
    "resultant",
    "factor_squarefree",
    "rational_roots",
]


# -- monomial orders --------------------------------------------------------


def _dp_rows(idx: Sequence[int], n: int) -> list[tuple[int, ...]]:
    rows = []
    for cut in range(len(idx), 0, -1):
        keep = set(idx[:cut])
        rows.append(tuple(1 if i in keep else 0 for i in range(n)))
    return rows


def _lp_rows(idx: Sequence[int], n: int) -> list[tuple[int, ...]]:
    return [tuple(1 if i == j else 0 for i in range(n)) for j in idx]


_ROWS = {"dp": _dp_rows, "lp": _lp_rows}


class MonomialOrder:
    """A global monomial order given by a weight matrix."""

    name = "?"

    def rows(self, n: int) -> tuple[tuple[int, ...], ...]:
        raise NotImplementedError

    def key(self, n: int):
        rows = self.rows(n)

        def k(e):
            return tuple(sum(w * x for w, x in zip(r, e) if w) for r in rows)

        return k

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and repr(self) == repr(other)

    def __hash__(self):
        return hash(repr(self))


class DegRevLex(MonomialOrder):
    """Degree reverse lexicographic (``dp``).

    Higher total degree wins; on ties the monomial with the smaller exponent
    in the last variable where they differ is larger.
    """

    name = "dp"

    def rows(self, n):
        return tuple(_dp_rows(range(n), n))

    def __repr__(self):
        return "dp"


class Lex(MonomialOrder):
    name = "lp"

    def rows(self, n):
        return tuple(_lp_rows(range(n), n))

    def __repr__(self):
        return "lp"


@dataclass(frozen=True, eq=False)
class Block(MonomialOrder):
    """Product order: blocks compared in turn, each with ``dp`` or ``lp``.

    Variables not listed in any block form a trailing ``dp`` block.  Putting
    the variables to eliminate in the first block gives an elimination order.
    """

    blocks: tuple[tuple[tuple[int, ...], str], ...]

    name = "block"

    def rows(self, n):
        seen = [i for idx, _ in self.blocks for i in idx]
        if len(set(seen)) != len(seen):
            raise ValueError("block order with overlapping blocks")
        blocks = list(self.blocks)
        rest = tuple(i for i in range(n) if i not in set(seen))
        if rest:
            blocks.append((rest, "dp"))
        out = []
        for idx, sub in blocks:
            out.extend(_ROWS[sub](tuple(idx), n))
        return tuple(out)

    def __repr__(self):
        return "block(" + ";".join(f"{sub}:{','.join(map(str, idx))}" for idx, sub in self.blocks) + ")"


DP = DegRevLex()
LEX = Lex()


def elimination_order(n: int, drop: Iterable[int]) -> Block:
    drop = tuple(sorted(set(drop)))
    keep = tuple(i for i in range(n) if i not in drop)
    return Block(((drop, "dp"), (keep, "dp")))


# -- rings ------------------------------------------------------------------


class PolyRing:
    """Polynomial ring over ``field`` in the named ``variables``."""

    def __init__(self, field: Field, variables: Sequence[str], order: MonomialOrder = DP):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        if field.param is not None and field.param in variables:
            raise ValueError(f"parameter {field.param!r} collides with a ring variable")
        self.field = field
        self.variables = variables
        self.nvars = len(variables)
        self.order = order
        self.index = {v: i for i, v in enumerate(variables)}

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.variables == other.variables
                and self.field == other.field)

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return f"{self.field!r}[{','.join(self.variables)}]"

    @cached_property
    def zero_exp(self) -> tuple[int, ...]:
        return (0,) * self.nvars

    @cached_property
    def order_key(self):
        return self.order.key(self.nvars)

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.field, self.variables, order)

    def with_field(self, field: Field) -> "PolyRing":
        return PolyRing(field, self.variables, self.order)

    def extend(self, names: Sequence[str], order: MonomialOrder = DP) -> "PolyRing":
        return PolyRing(self.field, self.variables + tuple(names), order)

    def gen(self, name: str) -> "Polynomial":
        i = self.index[name]
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    @property
    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.gen(v) for v in self.variables)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field.convert(c)
        return Polynomial(self, {self.zero_exp: c} if c else {})

    def monomial(self, exps: Sequence[int], c=1) -> "Polynomial":
        c = self.field.convert(c)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def __call__(self, x) -> "Polynomial":
        if isinstance(x, Polynomial):
            return x.embed(self)
        if isinstance(x, str):
            from .parser import parse_poly

            return parse_poly(x, self)
        return self.constant(x)

    def parse(self, text: str) -> "Polynomial":
        from .parser import parse_poly

        return parse_poly(text, self)


# -- polynomials ------------------------------------------------------------


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # construction helpers
    @classmethod
    def from_items(cls, ring, items) -> "Polynomial":
        terms: dict = {}
        for e, c in items:
            e = tuple(e)
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            elif e in terms:
                del terms[e]
        return cls(ring, terms)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise TypeError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        try:
            return self.ring.constant(other)
        except (TypeError, ValueError):
            return NotImplemented

    # arithmetic
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, Polynomial) else other
        if o is NotImplemented:
            return NotImplemented
        return self.ring == o.ring and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = _add_exp(e1, e2)
                v = terms.get(e, 0) + c1 * c2
                if v:
                    terms[e] = v
                else:
                    terms.pop(e, None)
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def scale(self, c) -> "Polynomial":
        c = self.ring.field.convert(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: v * c for e, v in self.terms.items()})

    def mul_monomial(self, exps) -> "Polynomial":
        return Polynomial(self.ring, {_add_exp(e, exps): c for e, c in self.terms.items()})

    # inspection
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or list(self.terms) == [self.ring.zero_exp]

    def constant_coeff(self):
        return self.terms.get(self.ring.zero_exp, self.ring.field.zero)

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var) -> int:
        i = self._var_index(var)
        return max((e[i] for e in self.terms), default=-1)

    def weighted_degree(self, weights: Sequence[int]) -> int:
        return max((sum(w * x for w, x in zip(weights, e)) for e in self.terms), default=-1)

    def used_variables(self) -> set[str]:
        return {self.ring.variables[i] for e in self.terms for i, x in enumerate(e) if x}

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        w = weights or (1,) * self.ring.nvars
        return len({sum(a * b for a, b in zip(w, e)) for e in self.terms}) <= 1

    def sorted_items(self, order: MonomialOrder | None = None, reverse: bool = True):
        key = order.key(self.ring.nvars) if order else self.ring.order_key
        return sorted(self.terms.items(), key=lambda it: key(it[0]), reverse=reverse)

    def leading_term(self, order: MonomialOrder | None = None):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = order.key(self.ring.nvars) if order else self.ring.order_key
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def leading_coefficient(self, order=None):
        return self.leading_term(order)[1]

    def monic(self, order=None) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return self.scale(1 / lc)

    def _var_index(self, var) -> int:
        if isinstance(var, int):
            return var
        if isinstance(var, Polynomial):
            (e,) = var.terms
            return e.index(1)
        return self.ring.index[var]

    # calculus and substitution
    def derivative(self, var) -> "Polynomial":
        i = self._var_index(var)
        terms = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = e[:i] + (k - 1,) + e[i + 1:]
                terms[ne] = c * k
        return Polynomial(self.ring, terms)

    def substitute(self, assignments: Mapping) -> "Polynomial":
        """Simultaneous substitution ``{var: polynomial-or-constant}``."""
        ring = self.ring
        subs = {}
        for var, val in assignments.items():
            i = self._var_index(var)
            subs[i] = val if isinstance(val, Polynomial) else ring.constant(val)
            if subs[i].ring != ring:
                subs[i] = subs[i].embed(ring)
        powers: dict = {}

        def pw(i, k):
            key = (i, k)
            if key not in powers:
                powers[key] = subs[i] ** k
            return powers[key]

        acc: dict = {}
        for e, c in self.terms.items():
            rest = tuple(0 if i in subs else x for i, x in enumerate(e))
            term = Polynomial(ring, {rest: c})
            for i, x in enumerate(e):
                if x and i in subs:
                    term = term * pw(i, x)
            for te, tc in term.terms.items():
                v = acc.get(te, 0) + tc
                if v:
                    acc[te] = v
                else:
                    acc.pop(te, None)
        return Polynomial(ring, acc)

    def evaluate(self, values: Mapping):
        p = self.substitute(values)
        if not p.is_constant():
            raise ValueError("evaluation left free variables")
        return p.constant_coeff()

    def homogeneous_parts(self, weights: Sequence[int] | None = None) -> list[tuple[int, "Polynomial"]]:
        """``[(degree, part), ...]`` from the top degree down."""
        w = weights or (1,) * self.ring.nvars
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            d = sum(a * b for a, b in zip(w, e))
            parts.setdefault(d, {})[e] = c
        return [(d, Polynomial(self.ring, parts[d])) for d in sorted(parts, reverse=True)]

    def homogenize(self, z, weights: Sequence[int] | None = None, degree: int | None = None) -> "Polynomial":
        """Pad every term with powers of ``z`` up to the top degree.

        ``weights`` selects the grading (default: total degree); variables of
        weight 0 behave as parameters.  ``z`` must not occur in ``self``.
        """
        zi = self._var_index(z)
        if any(e[zi] for e in self.terms):
            raise ValueError(f"variable {self.ring.variables[zi]} occurs in the polynomial")
        w = list(weights or (1,) * self.ring.nvars)
        w[zi] = 0
        d = self.weighted_degree(w) if degree is None else degree
        terms = {}
        for e, c in self.terms.items():
            k = d - sum(a * b for a, b in zip(w, e))
            terms[e[:zi] + (k,) + e[zi + 1:]] = c
        return Polynomial(self.ring, terms)

    def embed(self, ring: PolyRing) -> "Polynomial":
        """Move into ``ring`` matching variables by name."""
        if ring is self.ring or (ring.variables == self.ring.variables and ring.field == self.ring.field):
            return Polynomial(ring, dict(self.terms))
        pos = []
        for i, v in enumerate(self.ring.variables):
            if v in ring.index:
                pos.append(ring.index[v])
            else:
                pos.append(None)
        conv = ring.field.convert if ring.field != self.ring.field else None
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * ring.nvars
            for i, x in enumerate(e):
                if x:
                    if pos[i] is None:
                        raise ValueError(f"variable {self.ring.variables[i]} missing in {ring}")
                    ne[pos[i]] = x
            if conv is not None:
                c = conv(c)
                if not c:
                    continue
            terms[tuple(ne)] = c
        return Polynomial(ring, terms)

    def map_coefficients(self, fn, ring: PolyRing | None = None) -> "Polynomial":
        ring = ring or self.ring
        terms = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                terms[e] = v
        return Polynomial(ring, terms)

    # univariate views
    def univariate_var(self) -> int | None:
        """Index of the single variable used, ``None`` if constant, raise otherwise."""
        used = {i for e in self.terms for i, x in enumerate(e) if x}
        if len(used) > 1:
            raise ValueError(f"{self} is not univariate")
        return used.pop() if used else None

    def to_dense(self, var=None) -> tuple:
        if var is None:
            i = self.univariate_var()
        else:
            i = self._var_index(var)
        if i is None:
            c = self.constant_coeff()
            return (c,) if c else ()
        out = [self.ring.field.zero] * (self.degree_in(i) + 1)
        for e, c in self.terms.items():
            if any(x for j, x in enumerate(e) if j != i):
                raise ValueError(f"{self} is not univariate")
            out[e[i]] = c
        return upoly.trim(out)

    @classmethod
    def from_dense(cls, ring: PolyRing, coeffs: Sequence, var) -> "Polynomial":
        i = ring.index[var] if isinstance(var, str) else var
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                e = [0] * ring.nvars
                e[i] = k
                terms[tuple(e)] = ring.field.convert(c)
        return cls(ring, terms)

    # printing
    def __str__(self):
        return join_terms(self.sorted_items(), self.ring.variables, "machine")

    def __repr__(self):
        return f"Polynomial({self})"

    def report_str(self) -> str:
        return join_terms(self.sorted_items(), self.ring.variables, "report")


# -- univariate toolkit -----------------------------------------------------


def _as_dense(a: Polynomial, var=None):
    if var is None:
        var = a.univariate_var()
        if var is None:
            var = 0
    return a.to_dense(var), var


def univ_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd of two univariate polynomials in the same variable."""
    var = a.univariate_var()
    if var is None:
        var = b.univariate_var()
    if var is None:
        var = 0
    g = upoly.gcd(a.to_dense(var), b.to_dense(var))
    return Polynomial.from_dense(a.ring, g, var)


def squarefree_part(a: Polynomial) -> Polynomial:
    """Monic polynomial with the same roots as ``a`` and no repeated ones."""
    if not a:
        raise ValueError("squarefree part of zero")
    d, var = _as_dense(a)
    return Polynomial.from_dense(a.ring, upoly.squarefree_part(d), var)


def resultant(a: Polynomial, b: Polynomial, var=None):
    """Resultant in ``var`` of two polynomials whose other variables are absent."""
    da, v = _as_dense(a, var)
    db, _ = _as_dense(b, v)
    return upoly.resultant(da, db)


def discriminant(a: Polynomial, var=None):
    """``res(a, a') / lc(a)`` up to the usual sign convention.

    Returns a field element; for ``a`` over ``QQ(s)`` this is a rational
    function whose numerator locates the parameters where roots collide.
    """
    d, _ = _as_dense(a, var)
    n = len(d) - 1
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return a.ring.field.one
    r = upoly.resultant(d, upoly.deriv(d))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * r / d[-1]


def _primitive_integer(d: tuple) -> list[int]:
    from math import gcd, lcm

    qs = [mpq(c) for c in d]
    den = 1
    for q in qs:
        den = lcm(den, int(q.denominator))
    ints = [int(q * den) for q in qs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints] if g else ints


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def rational_roots(d: tuple) -> list:
    """Distinct rational roots of a dense QQ polynomial (rational root theorem)."""
    d = upoly.trim(tuple(mpq(c) for c in d))
    if len(d) < 2:
        return []
    roots = []
    while d and not d[0]:
        if mpq(0) not in roots:
            roots.append(mpq(0))
        d = d[1:]
    if len(d) < 2:
        return roots
    ints = _primitive_integer(d)
    a0, an = ints[0], ints[-1]
    for p in _divisors(a0):
        for q in _divisors(an):
            for r in (mpq(p, q), mpq(-p, q)):
                if r not in roots and not upoly.evaluate(d, r):
                    roots.append(r)
    return sorted(roots)


def factor_squarefree(a: Polynomial) -> list[tuple[Polynomial, int]]:
    """Squarefree factorisation over QQ with rational roots split off.

    Returns ``[(factor, multiplicity), ...]`` with monic squarefree factors
    that are pairwise coprime.  Linear factors come first in increasing root order;
    factors without rational roots are kept whole.
    """
    if not a:
        raise ValueError("factorisation of zero")
    d, var = _as_dense(a)
    if not isinstance(a.ring.field, RationalField):
        raise ValueError("factor_squarefree expects coefficients in QQ")
    # Yun's algorithm
    out: list[tuple[tuple, int]] = []
    if len(d) > 1:
        b = upoly.deriv(d)
        g = upoly.gcd(d, b)
        c = upoly.exquo(d, g)
        dd = upoly.exquo(b, g)
        k = 1
        while len(c) > 1:
            y = upoly.sub(dd, upoly.deriv(c))
            h = upoly.gcd(c, y)
            if len(h) > 1:
                out.append((upoly.monic(h), k))
            c = upoly.exquo(c, h)
            dd = upoly.exquo(y, h)
            k += 1
    result: list[tuple[tuple, int]] = []
    rest: list[tuple[tuple, int]] = []
    for f, k in out:
        for r in rational_roots(f):
            lin = (-r, mpq(1))
            result.append((lin, k))
            f = upoly.exquo(f, lin)
        if len(f) > 1:
            rest.append((upoly.monic(f), k))
    result.sort(key=lambda fk: fk[0][0] * -1)
    rest.sort(key=lambda fk: (len(fk[0]), [str(c) for c in fk[0]]))
    ring = a.ring
    return [(Polynomial.from_dense(ring, f, var), k) for f, k in result + rest]
