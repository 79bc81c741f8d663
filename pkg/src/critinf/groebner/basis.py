"""Ideals and their reduced Gröbner bases."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from ..poly import MonomialOrder, Polynomial, PolyRing
from ._kernels import reduce_poly
from .buchberger import Stats, buchberger
from .packing import Packer

INFINITE = float("inf")


class InfiniteDimensional(ValueError):
    """The quotient ring is not finite dimensional."""


class Ideal:
    """Ideal of ``ring`` given by generators; zero generators are dropped."""

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial]):
        self.ring = ring
        out = []
        for g in gens:
            if not isinstance(g, Polynomial):
                g = ring(g)
            elif g.ring != ring:
                g = g.embed(ring)
            if g:
                out.append(g)
        self.gens = tuple(out)
        self._gb: dict = {}

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens))})"

    def __add__(self, other) -> "Ideal":
        if isinstance(other, Ideal):
            return Ideal(self.ring, self.gens + other.gens)
        return Ideal(self.ring, self.gens + tuple(other))

    def groebner(self, order: MonomialOrder | None = None) -> "GroebnerBasis":
        order = order or self.ring.order
        gb = self._gb.get(order)
        if gb is None:
            gb = groebner_basis(self, order)
            self._gb[order] = gb
        return gb

    def contains(self, f: Polynomial) -> bool:
        return self.groebner().contains(f)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.groebner(self.ring.order) == other.groebner(self.ring.order)

    def __hash__(self):
        return hash(tuple(self.groebner(self.ring.order).elements))

    def vdim(self):
        return self.groebner().vdim()

    def embed(self, ring: PolyRing) -> "Ideal":
        return Ideal(ring, (g.embed(ring) for g in self.gens))


class GroebnerBasis:
    """Reduced Gröbner basis; elements sorted by increasing leading monomial."""

    def __init__(self, ring: PolyRing, order: MonomialOrder, packed: list[dict], packer: Packer):
        self.ring = ring
        self.order = order
        self._packer = packer
        self._packed = packed
        self._lms = [max(p) for p in packed]
        self._tails = [[(k, v) for k, v in p.items() if k != lm] for p, lm in zip(packed, self._lms)]
        self.elements = [Polynomial(ring, packer.unpack_poly(p)) for p in packed]
        self.leading_exponents = [packer.decode(lm) for lm in self._lms]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (self.ring == other.ring and self.order == other.order
                and self.elements == other.elements)

    def __repr__(self):
        return "GroebnerBasis[" + ", ".join(map(str, self.elements)) + "]"

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.elements)

    def is_unit(self) -> bool:
        return self.leading_exponents == [self.ring.zero_exp]

    def is_zero(self) -> bool:
        return not self.elements

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            f = f.embed(self.ring)
        p = self._packer.pack_poly(f.terms)
        r = reduce_poly(p, self._lms, self._tails, self._packer.guard, True)
        return Polynomial(self.ring, self._packer.unpack_poly(r))

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return list(self.leading_exponents)

    def vdim(self):
        """Dimension of the quotient as a vector space, or ``INFINITE``."""
        return quotient_dimension_of_leading(self.leading_exponents, self.ring.nvars)

    def standard_monomials(self) -> list[tuple[int, ...]]:
        return standard_monomials_of_leading(self.leading_exponents, self.ring.nvars)

    def dimension(self) -> int:
        """Krull dimension of the quotient; ``-1`` for the unit ideal."""
        return krull_dimension_of_leading(self.leading_exponents, self.ring.nvars)

    def minimal_polynomial(self, var: int, bound: int | None = None) -> tuple:
        """Monic generator of ``ideal ∩ K[x_var]`` as a dense coefficient tuple.

        Requires a finite dimensional quotient: the normal forms of
        ``1, x, x^2, ...`` are reduced against each other until the first
        linear dependency appears.
        """
        field = self.ring.field
        if self.is_unit():
            return (field.one,)
        v = self.vdim()
        if v == INFINITE:
            raise InfiniteDimensional("minimal polynomial needs a finite dimensional quotient")
        bound = int(v) if bound is None else bound
        packer = self._packer
        # echelon rows: pivot monomial -> (vector, combination of powers)
        rows: dict[int, tuple[dict, dict]] = {}
        step = packer.pack_poly({tuple(int(i == var) for i in range(self.ring.nvars)): field.one})
        power = {0: field.one}
        for k in range(bound + 1):
            vec = dict(power)
            comb = {k: field.one}
            while vec:
                piv = max(vec)
                if piv not in rows:
                    break
                rv, rc = rows[piv]
                c = vec[piv]
                for m, a in rv.items():
                    x = vec.get(m, 0) - c * a
                    if x:
                        vec[m] = x
                    else:
                        vec.pop(m, None)
                for m, a in rc.items():
                    x = comb.get(m, 0) - c * a
                    if x:
                        comb[m] = x
                    else:
                        comb.pop(m, None)
            if not vec:
                deg = max(comb)
                lc = comb[deg]
                return tuple(comb.get(i, field.zero) / lc for i in range(deg + 1))
            piv = max(vec)
            inv = 1 / vec[piv]
            rows[piv] = ({m: a * inv for m, a in vec.items()}, {m: a * inv for m, a in comb.items()})
            power = self._mul_reduce(power, step)
        raise AssertionError("no linear dependency among the powers")

    def _mul_reduce(self, p: dict, mono: dict) -> dict:
        (m, c), = mono.items()
        q = {k + m: v * c for k, v in p.items()}
        return reduce_poly(q, self._lms, self._tails, self._packer.guard, True)

    def s_polynomials_reduce_to_zero(self) -> bool:
        """Buchberger's criterion, checked on every pair."""
        els = self.elements
        for a in range(len(els)):
            for b in range(a + 1, len(els)):
                ea, eb = self.leading_exponents[a], self.leading_exponents[b]
                l = tuple(max(x, y) for x, y in zip(ea, eb))
                sa = els[a].mul_monomial(tuple(x - y for x, y in zip(l, ea)))
                sb = els[b].mul_monomial(tuple(x - y for x, y in zip(l, eb)))
                if self.normal_form(sa - sb):
                    return False
        return True


def groebner_basis(ideal, order: MonomialOrder | None = None, stats: Stats | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of an :class:`Ideal` (or a list of polynomials)."""
    if not isinstance(ideal, Ideal):
        polys = list(ideal)
        if not polys:
            raise ValueError("cannot infer the ring of an empty generator list")
        ideal = Ideal(polys[0].ring, polys)
    ring = ideal.ring
    order = order or ring.order
    packer = Packer(ring.nvars, order)
    packed = [packer.pack_poly(g.terms) for g in ideal.gens]
    # sparse inputs first keeps the early reducers short
    packed.sort(key=lambda p: (max(p), len(p)))
    result = buchberger(packed, packer, one=ring.field.one, stats=stats) if packed else []
    return GroebnerBasis(ring, order, result, packer)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.normal_form(f)


def is_member(f: Polynomial, I: Ideal) -> bool:
    return I.groebner().contains(f)


def quotient_dimension(I: Ideal):
    return I.groebner().vdim()


def standard_monomials(I: Ideal) -> list[tuple[int, ...]]:
    return I.groebner().standard_monomials()


# -- monomial-ideal combinatorics ------------------------------------------


def _divisible(m, lms) -> bool:
    return any(all(a <= b for a, b in zip(l, m)) for l in lms)


def _pure_power_bounds(lms: Sequence[tuple[int, ...]], n: int):
    bounds = [None] * n
    for l in lms:
        support = [i for i, x in enumerate(l) if x]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or l[i] < bounds[i]:
                bounds[i] = l[i]
    return bounds


def standard_monomials_of_leading(lms: Sequence[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    if not lms:
        raise InfiniteDimensional("zero ideal")
    if any(not any(l) for l in lms):
        return []
    bounds = _pure_power_bounds(lms, n)
    if any(b is None for b in bounds):
        raise InfiniteDimensional("no pure power for some variable among the leading monomials")
    out = []
    frontier = [(0,) * n]
    seen = {frontier[0]}
    while frontier:
        nxt = []
        for m in frontier:
            out.append(m)
            for i in range(n):
                if m[i] + 1 >= bounds[i]:
                    continue
                mm = m[:i] + (m[i] + 1,) + m[i + 1:]
                if mm in seen or _divisible(mm, lms):
                    continue
                seen.add(mm)
                nxt.append(mm)
        frontier = nxt
    return sorted(out, key=lambda e: (sum(e), e))


def quotient_dimension_of_leading(lms, n):
    try:
        return len(standard_monomials_of_leading(lms, n))
    except InfiniteDimensional:
        return INFINITE


def krull_dimension_of_leading(lms, n) -> int:
    if any(not any(l) for l in lms):
        return -1
    supports = [frozenset(i for i, x in enumerate(l) if x) for l in lms]
    for k in range(n, -1, -1):
        for S in combinations(range(n), k):
            s = set(S)
            if not any(sup <= s for sup in supports):
                return k
    return 0
