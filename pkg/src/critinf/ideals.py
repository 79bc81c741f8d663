"""Ideal operations built on Gröbner bases: elimination, colons and saturation."""

from __future__ import annotations

import logging
from typing import Iterable, Sequence

from . import upoly
from .groebner import INFINITE, GroebnerBasis, Ideal
from .poly import DP, Block, Polynomial, PolyRing, elimination_order

__all__ = [
    "NotStabilizing",
    "eliminate",
    "elimination_basis",
    "intersect",
    "ideal_quotient",
    "quotient_by_ideal",
    "saturate",
    "saturate_rabinowitsch",
    "saturate_by_variable",
    "homogenize_ideal",
    "stabilized_vdim",
    "exact_divide",
    "univariate_eliminant",
]

log = logging.getLogger(__name__)

TAG = "_w"


class NotStabilizing(RuntimeError):
    pass


def _indices(ring: PolyRing, names: Iterable) -> list[int]:
    out = []
    for v in names:
        if isinstance(v, Polynomial):
            v = next(iter(v.used_variables()))
        out.append(v if isinstance(v, int) else ring.index[v])
    return out


def elimination_basis(I: Ideal, drop: Iterable) -> GroebnerBasis:
    drop_idx = _indices(I.ring, drop)
    return I.groebner(elimination_order(I.ring.nvars, drop_idx))


def eliminate(I: Ideal, drop: Iterable) -> Ideal:
    """``I`` intersected with the subring of the variables not in ``drop``."""
    drop_idx = set(_indices(I.ring, drop))
    G = elimination_basis(I, drop_idx)
    keep = [g for g in G if not any(e[i] for e in g.terms for i in drop_idx)]
    return Ideal(I.ring, keep)


def univariate_eliminant(I: Ideal, var) -> tuple:
    """Dense monic generator of ``I ∩ K[x_var]``; ``()`` for the zero ideal.

    Zero-dimensional ideals use the minimal polynomial of ``x_var`` in the
    quotient; otherwise an elimination order is used.
    """
    vi = _indices(I.ring, [var])[0]
    G = I.groebner()
    if G.is_unit():
        return (I.ring.field.one,)
    if G.vdim() != INFINITE:
        return G.minimal_polynomial(vi)
    E = eliminate(I, [i for i in range(I.ring.nvars) if i != vi])
    gens = [g for g in E.groebner() if g]
    if not gens:
        return ()
    if len(gens) != 1:
        raise AssertionError("eliminant ideal is not principal")
    return upoly.monic(gens[0].to_dense(vi))


def _tagged_ring(ring: PolyRing) -> PolyRing:
    name = TAG
    while name in ring.variables or name == ring.field.param:
        name += "_"
    return PolyRing(ring.field, (name,) + ring.variables)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` via ``(w*I + (1-w)*J)`` with the tag ``w`` eliminated."""
    ring = I.ring
    R = _tagged_ring(ring)
    w = R.gens[0]
    gens = [w * g.embed(R) for g in I.gens] + [(1 - w) * g.embed(R) for g in J.gens]
    E = eliminate(Ideal(R, gens), [0])
    return Ideal(ring, (g.embed(ring) for g in _drop_tag(E.gens, R, ring)))


def _drop_tag(gens, R, ring):
    for g in gens:
        yield Polynomial(ring, {e[1:]: c for e, c in g.terms.items()})


def exact_divide(h: Polynomial, g: Polynomial) -> Polynomial:
    """``h / g`` for an exact multivariate division."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    key = h.ring.order_key
    ge, gc = g.leading_term()
    inv = 1 / gc
    rem = h
    q = {}
    while rem:
        re_ = max(rem.terms, key=key)
        rc = rem.terms[re_]
        d = tuple(a - b for a, b in zip(re_, ge))
        if min(d) < 0:
            raise ArithmeticError("inexact polynomial division")
        c = rc * inv
        q[d] = c
        rem = rem - g.mul_monomial(d).scale(c)
    return Polynomial(h.ring, q)


def ideal_quotient(I: Ideal, g: Polynomial) -> Ideal:
    """``I : g = {f : f*g in I}``."""
    if not g:
        raise ValueError("quotient by the zero polynomial")
    if g.is_constant():
        return Ideal(I.ring, I.gens)
    inter = intersect(I, Ideal(I.ring, [g]))
    return Ideal(I.ring, [exact_divide(h, g) for h in inter.gens])


def quotient_by_ideal(I: Ideal, J: Ideal) -> Ideal:
    """``I : J``, the intersection of ``I : g`` over the generators of ``J``."""
    G = I.groebner()
    parts = []
    for g in J.gens:
        if G.contains(g):
            continue
        parts.append(ideal_quotient(I, g))
    if not parts:
        return Ideal(I.ring, [I.ring.one()])
    out = parts[0]
    for P in parts[1:]:
        out = intersect(out, P)
    return out


def saturate(I: Ideal, J: Ideal | Polynomial | Sequence[Polynomial]) -> Ideal:
    """``I : J^∞`` by iterating ``I := I : J`` until the reduced basis is stable."""
    J = _as_ideal(I.ring, J)
    if not J.gens:
        raise ValueError("saturation by the zero ideal")
    G = I.groebner()
    rest = [r for r in (G.normal_form(g) for g in J.gens) if r]
    if not rest:
        return Ideal(I.ring, [I.ring.one()])
    if len(rest) == 1 and _is_variable(rest[0]):
        # modulo I, J is generated by one variable: use the homogeneous shortcut
        return saturate_by_variable(I, rest[0])
    cur = Ideal(I.ring, I.groebner().elements)
    while True:
        nxt = quotient_by_ideal(cur, J)
        nxt = Ideal(I.ring, nxt.groebner().elements)
        if nxt.groebner() == cur.groebner():
            return cur
        cur = nxt


def saturate_by_variable(I: Ideal, z, once: bool = False) -> Ideal:
    """``I : z^∞`` (or ``I : z`` with ``once``) for a ring variable ``z``.

    The ideal is homogenized with a fresh variable ``h``; for a homogeneous
    ideal a degrevlex basis with ``z`` last is divided by the powers of
    ``z`` it contains, and setting ``h = 1`` gives the answer.
    """
    ring = I.ring
    zi = _indices(ring, [z])[0]
    zname = ring.variables[zi]
    h = _fresh_name("_h", ring)
    others = tuple(v for v in ring.variables if v != zname)
    Rh = PolyRing(ring.field, others + (h, zname))
    Ih = homogenize_ideal(Ideal(Rh, [g.embed(Rh) for g in I.gens]), h)
    G = Ih.groebner(DP)
    hz = Rh.nvars - 1
    hi = Rh.nvars - 2
    out = []
    for g in G:
        k = min(e[hz] for e in g.terms)
        if once:
            k = min(k, 1)
        terms = {}
        for e, c in g.terms.items():
            ne = e[:hi] + (0, e[hz] - k)
            terms[ne] = terms.get(ne, 0) + c
        p = Polynomial(Rh, {e: c for e, c in terms.items() if c})
        out.append(_drop_var(p, Rh, ring, hi))
    return Ideal(ring, out)


def _is_variable(p: Polynomial) -> bool:
    if len(p.terms) != 1:
        return False
    (e,) = p.terms
    return sum(e) == 1


def _drop_var(p: Polynomial, R: PolyRing, ring: PolyRing, i: int) -> Polynomial:
    sub = PolyRing(R.field, R.variables[:i] + R.variables[i + 1:])
    q = Polynomial(sub, {e[:i] + e[i + 1:]: c for e, c in p.terms.items()})
    return q.embed(ring)


def _fresh_name(name: str, ring: PolyRing) -> str:
    while name in ring.variables or name == ring.field.param:
        name += "_"
    return name


def saturate_rabinowitsch(I: Ideal, g: Polynomial) -> Ideal:
    """``I : g^∞`` through ``(I, 1 - w*g)`` with ``w`` eliminated."""
    ring = I.ring
    R = _tagged_ring(ring)
    w = R.gens[0]
    gens = [h.embed(R) for h in I.gens] + [1 - w * g.embed(R)]
    E = eliminate(Ideal(R, gens), [0])
    return Ideal(ring, list(_drop_tag(E.gens, R, ring)))


def _as_ideal(ring, J) -> Ideal:
    if isinstance(J, Ideal):
        return J
    if isinstance(J, Polynomial):
        return Ideal(ring, [J])
    return Ideal(ring, list(J))


def _grading_order(ring: PolyRing, weights) -> Block | type(DP):
    if weights is None or all(w == 1 for w in weights):
        return DP
    graded = tuple(i for i, w in enumerate(weights) if w)
    if any(w not in (0, 1) for w in weights):
        raise ValueError("only 0/1 gradings are supported")
    return Block(((graded, "dp"),))


def homogenize_ideal(I: Ideal, z, weights: Sequence[int] | None = None) -> Ideal:
    """Homogenization of the ideal (not just of its generators).

    A basis for an order refining the grading is homogenized element-wise.
    ``weights`` gives the grading; variables of weight 0 act as parameters.
    ``z`` must be a ring variable absent from the generators.
    """
    ring = I.ring
    zi = _indices(ring, [z])[0]
    if any(e[zi] for g in I.gens for e in g.terms):
        raise ValueError("homogenizing variable occurs in the ideal")
    w = list(weights) if weights is not None else [1] * ring.nvars
    w[zi] = 0
    order = _grading_order(ring, w)
    G = I.groebner(order)
    return Ideal(ring, [g.homogenize(zi, w) for g in G])


def stabilized_vdim(base: Ideal, pivot: Polynomial, bound: int | None = None,
                    start: int = 1) -> tuple[int, int]:
    """Smallest ``k`` with ``vdim(base + pivot^k) == vdim(base + pivot^(k+1))``.

    Returns ``(k, dim)``.  The search stops with :class:`NotStabilizing` past
    ``bound`` (default: ``vdim(base) + 1`` when that is finite).
    """
    G = base.groebner()
    if bound is None:
        v = G.vdim()
        bound = int(v) + 1 if v != INFINITE else 64
    ring = base.ring
    piv = G.normal_form(pivot)
    if not piv:
        # pivot already in the ideal: every power gives the same quotient
        return start, G.vdim()
    power = piv ** start if start > 1 else piv
    power = G.normal_form(power)
    prev = _vdim_with(G, power, ring)
    k = start
    while k <= bound:
        power = G.normal_form(power * piv)
        cur = _vdim_with(G, power, ring)
        if cur == prev:
            if cur == INFINITE:
                raise NotStabilizing("quotient stays infinite dimensional")
            return k, int(cur)
        if cur != INFINITE and prev != INFINITE and cur < prev:
            raise AssertionError("vdim decreased while raising the pivot power")
        prev = cur
        k += 1
    raise NotStabilizing(f"no stabilization up to power {bound}")


def _vdim_with(G: GroebnerBasis, extra: Polynomial, ring) -> float | int:
    if not extra:
        return G.vdim()
    return Ideal(ring, list(G.elements) + [extra]).groebner().vdim()
