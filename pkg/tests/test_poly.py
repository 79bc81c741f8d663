import pytest
import sympy
from hypothesis import given, settings

from critinf import ParseError, RationalFunctionField
from critinf.fields import mpq
from critinf.parser import UnknownVariable
from critinf.poly import (
    DP,
    discriminant,
    factor_squarefree,
    squarefree_part,
    univ_gcd,
)

from conftest import BRIANCON, polys, ring, to_sympy

R2 = ring("xy")
T = ring("t")


def test_parse_matches_sympy_expansion():
    f = R2.parse(BRIANCON)
    x, y = sympy.symbols("x y")
    ref = sympy.expand(sympy.sympify(BRIANCON.replace("^", "**")))
    assert sympy.expand(to_sympy(f) - ref) == 0


def test_parse_leading_term():
    f = R2.parse("3*y*(x*(x*y+1)+1)^3")
    e, c = f.leading_term(DP)
    assert (e, c) == ((6, 4), 3)
    assert f.degree() == 10


def test_parse_with_field_parameter():
    K = RationalFunctionField("s")
    R = ring("xy", K)
    f = R.parse("x*(x^3*y+s*x^2+s^2*x+1)")
    assert str(f) == "x^4*y+(s)*x^3+(s^2)*x^2+x"


@pytest.mark.parametrize("text", ["x+", "x**y", "(x", "2x y", "x^y"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        R2.parse(text)


def test_unknown_variable():
    with pytest.raises(UnknownVariable):
        R2.parse("x+z")


def test_homogeneous_parts():
    f = R2.parse("x^2*y+x")
    assert [(d, str(p)) for d, p in f.homogeneous_parts()] == [(3, "x^2*y"), (1, "x")]
    assert [(d, str(p)) for d, p in R2.constant(7).homogeneous_parts()] == [(0, "7")]


def test_homogenize_and_back():
    R = ring("xyz")
    f = R.parse("x^2*y+x")
    h = f.homogenize("z")
    assert h == R.parse("x^2*y+x*z^2")
    assert h.substitute({"z": R.one()}) == f
    assert h.substitute({"y": R.one()}) == R.parse("x^2+x*z^2")
    R4 = ring("abcdz")
    g = R4.parse("a+a^4*b+b^2*c^3+d^5").homogenize("z")
    assert g == R4.parse("a*z^4+a^4*b+b^2*c^3+d^5")


def test_derivatives():
    f = R2.parse("x^2*y+x")
    assert f.derivative("x") == R2.parse("2*x*y+1")
    assert f.derivative("y") == R2.parse("x^2")


@settings(max_examples=40, deadline=None)
@given(polys(R2), polys(R2))
def test_arithmetic_against_sympy(f, g):
    assert sympy.expand(to_sympy(f * g) - to_sympy(f) * to_sympy(g)) == 0
    assert sympy.expand(to_sympy(f - g) - to_sympy(f) + to_sympy(g)) == 0
    assert (f * g).derivative("x") == f * g.derivative("x") + g * f.derivative("x")


@settings(max_examples=40, deadline=None)
@given(polys(R2))
def test_print_parse_roundtrip(f):
    assert R2.parse(str(f)) == f


def test_univariate_helpers():
    p = T.parse
    assert univ_gcd(p("t^2-1"), p("t-1")) == p("t-1")
    assert univ_gcd(p("3*t^2+16*t"), p("t")) == p("t")
    assert univ_gcd(p("t"), p("1")) == p("1")
    assert squarefree_part(p("(t-1)^2*(t+2)")) == p("t^2+t-2")
    assert squarefree_part(p("3*t^2+16*t")) == p("t^2+16/3*t")
    assert squarefree_part(p("5")) == p("1")
    facs = sorted(str(f) for f, _ in factor_squarefree(p("3*t^2+16*t")))
    assert facs == ["t", "t+16/3"]
    facs = sorted(str(f) for f, _ in factor_squarefree(p("t^3+t")))
    assert facs == ["t", "t^2+1"]


def test_discriminants():
    K = RationalFunctionField("s")
    Ts = ring("t", K)
    d = discriminant(Ts.parse("t^2+(s^2+1)*t"))
    s = K.gen()
    assert d == (s * s + 1) ** 2
    assert discriminant(Ts.parse("t-s")) == K.one
    assert discriminant(T.parse("t^2+3*t+1")) == mpq(5)
