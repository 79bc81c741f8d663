"""Shared helpers: sympy conversion (independent oracle) and hypothesis strategies."""

import sympy
from hypothesis import settings, strategies as st

from critinf import QQ, PolyRing, Polynomial

# fixed example stream so every run checks the same cases
settings.register_profile("repro", derandomize=True, deadline=None)
settings.load_profile("repro")

BRIANCON = "3*y*(x*(x*y+1)+1)^3+3*(x*(x*y+1)+1)^2*(x*y+1)-5*(x*(x*y+1)+1)*(x*y+1)-(x*y+1)"
CHOUDARY_DIMCA = "a+a^4*b+b^2*c^3+d^5"


def to_sympy(p, extra=()):
    names = tuple(p.ring.variables) + tuple(extra)
    param = getattr(p.ring.field, "param", None)
    if param:
        names += (param,)
    syms = {v: sympy.Symbol(v) for v in names}
    return sympy.sympify(str(p).replace("^", "**"), locals=syms)


def sympy_dense(d, var="t"):
    """Dense tuple (lowest degree first) as a sympy expression."""
    t = sympy.Symbol(var)
    return sum(sympy.Rational(int(c.numerator), int(c.denominator)) * t**i for i, c in enumerate(d))


def ring(names, field=QQ):
    return PolyRing(field, tuple(names))


@st.composite
def polys(draw, R, max_terms=4, max_deg=3, coeff=5):
    n = R.nvars
    k = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(k):
        e = tuple(draw(st.integers(0, max_deg)) for _ in range(n))
        c = draw(st.integers(-coeff, coeff))
        if c:
            terms[e] = QQ.convert(c)
    return Polynomial(R, terms)


# -- acceptance summary -------------------------------------------------------

ACCEPTANCE_LINES: dict = {}


def record_acceptance(number: int, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    ACCEPTANCE_LINES.setdefault(number, []).append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        for line in ACCEPTANCE_LINES[n]:
            terminalreporter.write_line(line)
