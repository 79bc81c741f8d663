import random

import sympy
from hypothesis import HealthCheck, given, settings, strategies as st

from critinf import Ideal, groebner_basis
from critinf.groebner import INFINITE, is_member, normal_form, quotient_dimension, standard_monomials
from critinf.poly import DP, LEX

from conftest import polys, ring, to_sympy

R2 = ring("xy")
R3 = ring("xyz")


def naive_reduce(f, G, order):
    """Textbook multivariate division, written independently of the library kernels."""
    lts = [g.leading_term(order) for g in G]
    r = f.ring.zero()
    p = f
    while p:
        e, c = p.leading_term(order)
        for g, (ge, gc) in zip(G, lts):
            if all(a >= b for a, b in zip(e, ge)):
                p = p - g.mul_monomial(tuple(a - b for a, b in zip(e, ge))).scale(c / gc)
                break
        else:
            lead = f.ring.monomial(e, c)
            r = r + lead
            p = p - lead
    return r


def s_polys_vanish(G, order):
    els = list(G)
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            (ea, ca), (eb, cb) = els[i].leading_term(order), els[j].leading_term(order)
            l = tuple(max(a, b) for a, b in zip(ea, eb))
            s = (els[i].mul_monomial(tuple(a - b for a, b in zip(l, ea))).scale(1 / ca)
                 - els[j].mul_monomial(tuple(a - b for a, b in zip(l, eb))).scale(1 / cb))
            if naive_reduce(s, els, order):
                return False
    return True


def same_ideal_as_sympy(G, gens, order_name):
    syms = sympy.symbols(" ".join(G.ring.variables))
    ref = sympy.groebner([to_sympy(g) for g in gens], *syms, order=order_name, domain="QQ")
    ours = [to_sympy(g) for g in G]
    if ref.exprs == [1]:
        return ours == [1]
    return (all(ref.contains(p) for p in ours)
            and all(sympy.reduced(q, ours, *syms, order=order_name, domain="QQ")[1] == 0 for q in ref.exprs)
            and len(ref.exprs) == len(ours))


def test_basic_examples():
    G = groebner_basis(Ideal(R2, [R2.parse("x^2-y"), R2.parse("y")]))
    assert sorted(str(g) for g in G) == ["x^2", "y"]
    assert [str(g) for g in Ideal(R2, [R2.one()]).groebner()] == ["1"]
    J = Ideal(R2, [R2.parse("2*x"), R2.parse("2*y")]).groebner()
    assert sorted(str(g) for g in J) == ["x", "y"]


def test_normal_forms_and_membership():
    G = Ideal(R2, [R2.parse("x^2-y")]).groebner()
    assert normal_form(R2.parse("x^2"), G) == R2.parse("y")
    assert normal_form(R2.parse("y"), Ideal(R2, [R2.parse("x^2-y"), R2.parse("y")]).groebner()) == R2.zero()
    assert normal_form(R2.parse("x+1"), Ideal(R2, [R2.parse("x^2")]).groebner()) == R2.parse("x+1")
    assert is_member(R2.parse("x^2"), Ideal(R2, [R2.parse("x^2-y"), R2.parse("y")]))
    assert not is_member(R2.parse("x"), Ideal(R2, [R2.parse("x^2")]))


def test_quotient_dimensions():
    assert quotient_dimension(Ideal(R2, R2.gens)) == 1
    I = Ideal(R2, [R2.parse("x^2"), R2.parse("x*y"), R2.parse("y^2")])
    assert quotient_dimension(I) == 3
    assert sorted(standard_monomials(I)) == [(0, 0), (0, 1), (1, 0)]
    assert standard_monomials(Ideal(R2, R2.gens)) == [(0, 0)]
    f = R2.parse("x^3-3*x+y^2")
    J = Ideal(R2, [f.derivative(0), f.derivative(1)])
    assert sorted(standard_monomials(J)) == [(0, 0), (1, 0)]
    assert quotient_dimension(Ideal(R2, [R2.parse("x")])) == INFINITE


def test_cyclic4_against_sympy():
    R = ring("abcd")
    a, b, c, d = R.gens
    gens = [a + b + c + d, a * b + b * c + c * d + d * a,
            a * b * c + b * c * d + c * d * a + d * a * b, a * b * c * d - 1]
    G = groebner_basis(gens, DP)
    assert same_ideal_as_sympy(G, gens, "grevlex")
    assert s_polys_vanish(G, DP)


ideal_gens = st.lists(polys(R3, max_terms=3, max_deg=2), min_size=1, max_size=3)


@settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(ideal_gens, st.sampled_from([("grevlex", DP), ("lex", LEX)]))
def test_random_ideals_against_sympy(gens, order):
    gens = [g for g in gens if g]
    if not gens:
        return
    G = groebner_basis(gens, order[1])
    assert s_polys_vanish(G, order[1])
    assert same_ideal_as_sympy(G, gens, order[0])


@settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(ideal_gens, st.integers(0, 10**6))
def test_reduced_basis_is_canonical(gens, seed):
    gens = [g for g in gens if g]
    if not gens:
        return
    rng = random.Random(seed)
    rewritten = list(gens)
    for _ in range(3):
        i, j = rng.randrange(len(rewritten)), rng.randrange(len(rewritten))
        m = R3.monomial(tuple(rng.randint(0, 1) for _ in range(3)), rng.randint(-3, 3))
        if i != j:
            rewritten[i] = rewritten[i] + m * rewritten[j]
    rng.shuffle(rewritten)
    rewritten.append(rewritten[0] * R3.parse("x+2*y-z"))
    assert groebner_basis(gens, DP) == groebner_basis([g for g in rewritten if g], DP)
