import random
import warnings

import pytest

from critinf import (
    DegreeNotConstant,
    FamilySpec,
    GenericNonIsolated,
    NonIsolatedAffineSingularities,
    par_crit,
    upoly,
)
from critinf.family import (
    _value_locus,
    affine_escape_parameters,
    baff_jump_parameters,
    binf_jump_parameters,
    degree_drop_parameters,
    lambda_jump_parameters,
    member_multi_integer,
)
from critinf.fields import RationalFunctionField, mpq

from conftest import BRIANCON

F53 = "y*(1-s*x)*(y-(s-1)*x)"
F54 = "x*(x^3*y+s*x^2+s^2*x+1)"
F55 = "(x-s^2-1)*(x^2*y+1)"


def fam(text, xs="xy"):
    return FamilySpec.parse(text, xs)


def quiet_par_crit(F):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegreeNotConstant)
        return par_crit(F)


def test_family_spec_views():
    F = fam(F54)
    assert F.xs == ("x", "y") and F.degree == 5
    assert str(F.generic()) == "x^4*y+(s)*x^3+(s^2)*x^2+x"
    assert str(F.specialize(2)) == "x^4*y+2*x^3+4*x^2+x"


@pytest.mark.parametrize("text,expected", [(F53, "s^2-s"), (F54, "1"), (F55, "s^2+1")])
def test_par_crit_outputs(text, expected):
    r = quiet_par_crit(fam(text))
    assert str(r.sprime_poly) == expected
    total = r.sprime_poly.to_dense(0)
    assert total == upoly.squarefree_part(total)
    for comp in r.components.values():
        # every component divides the aggregate up to squarefree normalization
        q = comp.to_dense(0)
        if len(q) > 1:
            assert len(upoly.gcd(q, total)) == len(upoly.squarefree_part(q))


def test_trivial_family_note():
    r = quiet_par_crit(fam(F54))
    assert any("topologically equivalent" in n for n in r.notes)
    r3 = quiet_par_crit(fam("x+y^2+z^2+s", "xyz"))
    assert str(r3.sprime_poly) == "1"
    assert any("n = 3" in n for n in r3.notes)


def test_degree_drop_warning():
    with pytest.warns(DegreeNotConstant):
        r = par_crit(fam(F53))
    assert not r.degree_constant
    assert str(degree_drop_parameters(fam(F53))) == "s"


def test_components_individually():
    assert str(affine_escape_parameters(fam(F54))) == "1"
    assert str(affine_escape_parameters(fam("x^2+y^2"))) == "1"
    assert str(baff_jump_parameters(fam(F55))) == "1"
    assert str(binf_jump_parameters(fam(F54))) == "1"
    assert str(lambda_jump_parameters(fam(F54))) == "1"
    assert str(binf_jump_parameters(fam(BRIANCON))) == "1"
    assert str(lambda_jump_parameters(fam(BRIANCON))) == "1"
    # e(t, s) = t + (s^2+1) collides with the affine value t exactly at s^2+1 = 0
    assert str(quiet_par_crit(fam(F55)).components["card_b_jump"]) == "s^2+1"


def test_value_locus_examples():
    K = RationalFunctionField("s")
    s = K.gen()
    # t^2 - s: double root at s = 0
    assert _value_locus((-s, K.zero, K.one), K) == (0, 1)
    # (s-1) t - 1: the root escapes at s = 1
    assert _value_locus((K.convert(-1), s - 1), K) == (-1, 1)


def test_generic_non_isolated():
    with pytest.raises(GenericNonIsolated):
        par_crit(fam("s*x^2"))


def test_soundness_spot_check():
    F = fam(F53)
    generic = member_multi_integer(F, mpq(7, 3))
    # s = 0 is a root of the candidate polynomial and the multi-integer jumps there
    assert member_multi_integer(F, 0) != generic
    # at s = 1 the member y^2 (1 - x) has a non-isolated singular line
    with pytest.raises(NonIsolatedAffineSingularities):
        member_multi_integer(F, 1)
    assert tuple(member_multi_integer(fam(F55), mpq(7, 3))) == (1, 1, 1, 1, 2)


@pytest.mark.parametrize("text", [F53, F54, F55])
def test_completeness_sampling(text):
    F = fam(text)
    sprime = quiet_par_crit(F).sprime_poly
    rng = random.Random(2024)
    seen = set()
    while len(seen) < 20:
        v = mpq(rng.randint(-40, 40), rng.randint(1, 9))
        if v in seen or sprime.evaluate({"s": v}) == 0:
            continue
        seen.add(v)
    results = {tuple(member_multi_integer(F, v)) for v in seen}
    assert len(results) == 1
