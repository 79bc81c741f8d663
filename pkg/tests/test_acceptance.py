"""Acceptance criteria, one PASS/FAIL line each (shown in the pytest summary).

Run directly with ``python tests/test_acceptance.py`` to print only these lines.
"""

import random
import time
import warnings

import sympy

from critinf import (
    QQ,
    AlgebraicField,
    DegreeNotConstant,
    FamilySpec,
    Ideal,
    RationalFunctionField,
    analyze,
    analyze_with_splitting,
    groebner_basis,
    par_crit,
)
from critinf.crit import random_affine_change
from critinf.family import member_multi_integer
from critinf.fields import mpq
from critinf.groebner import basis as gb_basis
from critinf.poly import DP

from conftest import BRIANCON, CHOUDARY_DIMCA, record_acceptance, ring

TIME_LIMIT = 60.0


def _check(number, label, fn):
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # reported as a failing line, then re-raised by the assert
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if elapsed > TIME_LIMIT:
        ok, detail = False, f"{detail}; took {elapsed:.1f} s"
    record_acceptance(number, ok, f"{label} ({detail}; {elapsed:.1f} s)")
    assert ok, detail


def _strs(details):
    return {str(p): v for p, v in details}


def _par_crit(text):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegreeNotConstant)
        return par_crit(FamilySpec.parse(text, "xy"))


# 1 ---------------------------------------------------------------------------

def criterion_1():
    r = analyze(ring("xy").parse(BRIANCON))
    T = ring("t")
    ok = (str(r.affine.baff_poly) == "1" and r.affine.mu == 0
          and r.infinity.binf_poly == T.parse("t^2+16/3*t")
          and r.infinity.lam == 4
          and _strs(r.infinity.lambda_details) == {"t": 1, "t+16/3": 3}
          and tuple(r.multi_integer) == (0, 0, 4, 2, 2))
    return ok, f"mu={r.affine.mu} binf={r.infinity.binf_poly} lambda={r.infinity.lam} m={tuple(r.multi_integer)}"


def test_criterion_1_briancon():
    _check(1, "Briancon polynomial", criterion_1)


# 2 ---------------------------------------------------------------------------

def criterion_2():
    r = analyze(ring("abcd").parse(CHOUDARY_DIMCA))
    ok = (str(r.affine.baff_poly) == "1" and r.affine.mu == 0
          and str(r.infinity.binf_poly) == "t" and r.infinity.lam == 8)
    return ok, f"mu={r.affine.mu} binf={r.infinity.binf_poly} lambda={r.infinity.lam}"


def test_criterion_2_choudary_dimca():
    _check(2, "Choudary-Dimca polynomial", criterion_2)


# 3, 4, 5 ----------------------------------------------------------------------

def criterion_3():
    r = _par_crit("y*(1-s*x)*(y-(s-1)*x)")
    return str(r.sprime_poly) == "s^2-s", f"sprime={r.sprime_poly}"


def test_criterion_3_family():
    _check(3, "family y(1-sx)(y-(s-1)x)", criterion_3)


def criterion_4():
    r = _par_crit("x*(x^3*y+s*x^2+s^2*x+1)")
    noted = any("topologically equivalent" in n for n in r.notes)
    return str(r.sprime_poly) == "1" and noted, f"sprime={r.sprime_poly} note={'yes' if noted else 'no'}"


def test_criterion_4_trivial_family():
    _check(4, "family x(x^3y+sx^2+s^2x+1)", criterion_4)


def criterion_5():
    text = "(x-s^2-1)*(x^2*y+1)"
    r = _par_crit(text)
    g = analyze(ring("xy", RationalFunctionField("s")).parse(text))
    K = AlgebraicField(QQ, "s", (1, 0, 1))
    branches = analyze_with_splitting(ring("xy", K).parse(text))
    (_, e), = branches
    ok = (str(r.sprime_poly) == "s^2+1"
          and str(g.affine.baff_poly) == "t" and g.affine.mu == 1
          and str(g.infinity.binf_poly) == "t+(s^2+1)" and g.infinity.lam == 1
          and str(e.affine.baff_poly) == "1" and e.affine.mu == 0
          and str(e.infinity.binf_poly) == "t" and e.infinity.lam == 1)
    return ok, (f"sprime={r.sprime_poly}; generic {g.affine.baff_poly},{g.affine.mu},"
                f"{g.infinity.binf_poly},{g.infinity.lam}; s^2+1=0: {e.affine.baff_poly},"
                f"{e.affine.mu},{e.infinity.binf_poly},{e.infinity.lam}")


def test_criterion_5_combination():
    _check(5, "family (x-s^2-1)(x^2y+1)", criterion_5)


# 6 ---------------------------------------------------------------------------

def local_milnor_at_origin(F, x, z, N=10):
    """dim C[x,z]/(dF/dx, dF/dz, (x,z)^N) with sympy; equals the local Milnor
    number at the origin once N is large and the singularity is isolated."""
    gens = [sympy.diff(F, x), sympy.diff(F, z)] + [x**i * z**(N - i) for i in range(N + 1)]
    G = sympy.groebner(gens, x, z, order="grevlex")
    lms = [sympy.Poly(g, x, z).monoms(order="grevlex")[0] for g in G.exprs]
    return sum(1 for i in range(N + 1) for j in range(N + 1)
               if not any(i >= a and j >= b for a, b in lms))


def criterion_6():
    r = analyze(ring("xy").parse("x^2*y+x"))
    x, z, c = sympy.symbols("x z c")
    F = x**2 + x * z**2 - c * z**3
    generic = {local_milnor_at_origin(F.subs(c, v), x, z) for v in (1, 2, -3, sympy.Rational(5, 7))}
    special = local_milnor_at_origin(F.subs(c, 0), x, z)
    ok = (generic == {2} and special == 3
          and r.affine.mu == 0 and str(r.affine.baff_poly) == "1"
          and str(r.infinity.binf_poly) == "t" and r.infinity.lam == special - 2)
    return ok, (f"mu={r.affine.mu} B_inf roots of {r.infinity.binf_poly} lambda={r.infinity.lam}; "
                f"oracle local Milnor numbers generic={sorted(generic)} special={special}")


def test_criterion_6_broughton_oracle():
    _check(6, "x^2y+x against local Milnor numbers of x^2+xz^2-cz^3", criterion_6)


# 7 ---------------------------------------------------------------------------

SUITE = [("xy", "x^2+y^2"), ("xy", "x^3-3*x+y^2"), ("xy", "x^2*y+x"), ("xy", "x^4-x^2+y^2"),
         ("xy", "x*(x*y-1)"), ("xy", "x^3+y^3-3*x*y"), ("xy", BRIANCON), ("abcd", CHOUDARY_DIMCA)]


def criterion_7a():
    emitted = []
    orig = gb_basis.GroebnerBasis.__init__

    def recording(self, *a, **kw):
        orig(self, *a, **kw)
        emitted.append(self)

    gb_basis.GroebnerBasis.__init__ = recording
    try:
        for names, text in SUITE:
            analyze(ring(names).parse(text))
    finally:
        gb_basis.GroebnerBasis.__init__ = orig
    bad = [G for G in emitted if not G.s_polynomials_reduce_to_zero()]
    return not bad, f"{len(emitted)} bases emitted, {len(bad)} with a nonzero S-polynomial remainder"


def criterion_7b():
    R = ring("xyz")
    rng = random.Random(7)
    trials = 0
    for _ in range(25):
        gens = []
        for _ in range(rng.randint(1, 3)):
            terms = {tuple(rng.randint(0, 2) for _ in range(3)): rng.randint(-4, 4) for _ in range(3)}
            p = R.zero()
            for e, c in terms.items():
                p = p + R.monomial(e, c)
            if p:
                gens.append(p)
        if not gens:
            continue
        new = list(gens)
        for _ in range(3):
            i, j = rng.randrange(len(new)), rng.randrange(len(new))
            if i != j:
                new[i] = new[i] + R.monomial(tuple(rng.randint(0, 1) for _ in range(3)), rng.randint(-3, 3)) * new[j]
        rng.shuffle(new)
        if groebner_basis(gens, DP) != groebner_basis([g for g in new if g], DP):
            return False, f"bases differ for {gens}"
        trials += 1
    return True, f"{trials} random ideals, identical reduced bases after rewriting"


def criterion_7c():
    count = 0
    for names, text in SUITE:
        r = analyze(ring(names).parse(text))
        mu_sum = sum(p.degree() * v for p, v in r.affine.mu_details)
        lam_sum = sum(p.degree() * v for p, v in r.infinity.lambda_details)
        if mu_sum != r.multi_integer.mu or lam_sum != r.multi_integer.lam:
            return False, f"sum mismatch on {text}"
        if any(v < 0 for _, v in r.sphere_counts):
            return False, f"negative sphere count on {text}"
        count += 1
    return True, f"Milnor sums match and sphere counts are >= 0 on {count} polynomials"


def criterion_7d():
    out = []
    for names, text in [("xy", BRIANCON), ("abcd", CHOUDARY_DIMCA)]:
        f = ring(names).parse(text)
        base = analyze(f).multi_integer
        for seed in (2, 3):
            g, _ = random_affine_change(f, seed)
            m = analyze(g).multi_integer
            same = (m.mu, m.card_baff, m.lam, m.card_binf) == (base.mu, base.card_baff, base.lam, base.card_binf)
            out.append(same)
    return all(out), f"{sum(out)}/{len(out)} changed polynomials keep (mu, #B_aff, lambda, #B_inf)"


def criterion_7e():
    summary = []
    for text in ["y*(1-s*x)*(y-(s-1)*x)", "x*(x^3*y+s*x^2+s^2*x+1)", "(x-s^2-1)*(x^2*y+1)"]:
        F = FamilySpec.parse(text, "xy")
        sprime = _par_crit(text).sprime_poly
        rng = random.Random(11)
        values = set()
        while len(values) < 20:
            v = mpq(rng.randint(-50, 50), rng.randint(1, 12))
            if sprime.evaluate({"s": v}) != 0:
                values.add(v)
        ms = {tuple(member_multi_integer(F, v)) for v in values}
        if len(ms) != 1:
            return False, f"{text}: {len(ms)} distinct multi-integers"
        summary.append(str(ms.pop()))
    return True, "20 parameters per family, one multi-integer each: " + ", ".join(summary)


def test_criterion_7a_s_polynomials():
    _check(7, "S-polynomials reduce to zero on every emitted basis", criterion_7a)


def test_criterion_7b_canonicity():
    _check(7, "reduced basis canonical under generator rewrites", criterion_7b)


def test_criterion_7c_sums():
    _check(7, "Milnor sums and sphere counts", criterion_7c)


def test_criterion_7d_affine_change_invariance():
    _check(7, "affine change invariance on examples 1-2 (seeds 2, 3)", criterion_7d)


def test_criterion_7e_family_completeness():
    _check(7, "family completeness sampling", criterion_7e)


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
