import sympy
from hypothesis import HealthCheck, given, settings, strategies as st

from critinf import Ideal
from critinf.fields import mpq
from critinf.ideals import (
    eliminate,
    homogenize_ideal,
    ideal_quotient,
    intersect,
    saturate,
    saturate_by_variable,
    saturate_rabinowitsch,
    stabilized_vdim,
    univariate_eliminant,
)

from conftest import BRIANCON, polys, ring, to_sympy

R3 = ring("xyz")


def same(I, J):
    return I.groebner() == J.groebner()


def ideal(R, *texts):
    return Ideal(R, [R.parse(t) for t in texts])


def test_eliminate_examples():
    R = ring("txy")
    E = eliminate(ideal(R, "t-x", "t^2-y"), ["t"])
    assert same(E, ideal(R, "x^2-y"))
    R = ring("xyt")
    f = R.parse("x^3-3*x+y^2")
    t = R.gen("t")
    I = Ideal(R, [f - t, f.derivative("x"), f.derivative("y")])
    assert same(eliminate(I, ["x", "y"]), ideal(R, "t^2-4"))
    assert univariate_eliminant(I, "t") == (mpq(-4), 0, 1)


def test_eliminate_against_sympy_lex():
    R = ring("xyz")
    I = ideal(R, "x^2+y*z-1", "x*y-z^2", "y^3-x")
    E = eliminate(I, ["x"])
    xs = sympy.symbols("x y z")
    ref = sympy.groebner([to_sympy(g) for g in I.gens], *xs, order="lex")
    ref_e = [p for p in ref.exprs if not p.has(xs[0])]
    ours = [to_sympy(g) for g in E.groebner()]
    sub = sympy.groebner(ref_e, *xs[1:], order="grevlex")
    assert all(sub.contains(p) for p in ours)
    assert all(sympy.groebner(ours, *xs[1:], order="grevlex").contains(p) for p in ref_e)


def test_quotients():
    assert same(ideal_quotient(ideal(R3, "x^2"), R3.parse("x")), ideal(R3, "x"))
    assert same(ideal_quotient(ideal(R3, "x^2*y", "x*z"), R3.parse("x")), ideal(R3, "x*y", "z"))
    I = ideal(R3, "x^2*y", "x*z")
    assert same(ideal_quotient(I, R3.one()), I)
    assert same(intersect(ideal(R3, "x"), ideal(R3, "y")), ideal(R3, "x*y"))


def test_saturations():
    assert same(saturate(ideal(R3, "x^2*y", "x*z"), ideal(R3, "x")), ideal(R3, "y", "z"))
    I = ideal(R3, "x^2*y", "x*z")
    assert same(saturate(I, ideal(R3, "1")), I)
    assert same(saturate(ideal(R3, "z*(x-1)"), ideal(R3, "z")), ideal(R3, "x-1"))
    # saturation by a non-principal ideal takes the iterated-colon route;
    # I : (g1, g2)^inf is the intersection of I : g1^inf and I : g2^inf
    I = ideal(R3, "x*y*(x-1)", "y^2*(x+y)")
    g1, g2 = R3.parse("y"), R3.parse("x-1")
    ref = intersect(saturate_rabinowitsch(I, g1), saturate_rabinowitsch(I, g2))
    assert same(saturate(I, Ideal(R3, [g1, g2])), ref)


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(polys(R3, max_terms=3, max_deg=2), min_size=1, max_size=3))
def test_variable_saturation_agrees_with_rabinowitsch(gens):
    gens = [g for g in gens if g]
    if not gens:
        return
    I = Ideal(R3, gens)
    z = R3.gen("z")
    assert same(saturate_by_variable(I, "z"), saturate_rabinowitsch(I, z))


def test_homogenize_ideal():
    R = ring("xyz")
    H = homogenize_ideal(ideal(R, "y-x^2"), "z")
    assert same(H, ideal(R, "y*z-x^2"))
    H = homogenize_ideal(ideal(R, "x^2-1", "y-x^3"), "z")
    assert all(g.is_homogeneous() for g in H.gens)
    assert H.groebner().contains(R.parse("x^2-z^2"))
    back = Ideal(R, [g.substitute({"z": R.one()}) for g in H.gens])
    assert same(back, ideal(R, "x^2-1", "y-x^3"))
    assert homogenize_ideal(ideal(R, "1"), "z").groebner().is_unit()


def test_stabilized_vdim():
    R = ring("xy")
    f = R.parse("x^3-3*x+y^2")
    J = Ideal(R, [f.derivative("x"), f.derivative("y")])
    assert stabilized_vdim(J, f + 2)[1] == 1
    assert stabilized_vdim(J, f - 2)[1] == 1
    assert stabilized_vdim(J, f - 5)[1] == 0


def test_briancon_eliminant_at_infinity():
    from critinf.crit import Analyzer

    A = Analyzer(ring("xy").parse(BRIANCON))
    g = A.critical_values_at_infinity()
    assert g == (0, mpq(16, 3), 1)
