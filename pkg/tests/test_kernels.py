"""The compiled kernels must agree term by term with the pure-Python ones."""

import importlib

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from critinf import Ideal
from critinf.groebner import _kernels_py as py
from critinf.groebner.packing import Packer
from critinf.poly import DP

from conftest import polys, ring

cy = pytest.importorskip("critinf.groebner._kernels_cy")

R3 = ring("xyz")


def test_backend_selection_respects_env(monkeypatch):
    import critinf.groebner._kernels as k

    monkeypatch.setenv("CRITINF_PURE_PYTHON", "1")
    try:
        assert importlib.reload(k).BACKEND == "python"
    finally:
        monkeypatch.delenv("CRITINF_PURE_PYTHON")
        importlib.reload(k)
    assert k.BACKEND == "cython"


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(polys(R3, max_terms=3, max_deg=2), min_size=1, max_size=3),
       polys(R3, max_terms=6, max_deg=4), st.booleans())
def test_reduce_poly_agrees(gens, f, full):
    gens = [g for g in gens if g]
    if not gens:
        return
    G = Ideal(R3, gens).groebner(DP)
    P = Packer(3, DP)
    p = P.pack_poly(f.terms)
    a = py.reduce_poly(dict(p), G._lms, G._tails, P.guard, full)
    b = cy.reduce_poly(dict(p), G._lms, G._tails, P.guard, full)
    assert a == b


@settings(max_examples=40, deadline=None)
@given(polys(R3, max_terms=4), polys(R3, max_terms=4))
def test_spoly_agrees(f, g):
    if not f or not g:
        return
    P = Packer(3, DP)
    pf, pg = P.pack_poly(f.monic(DP).terms), P.pack_poly(g.monic(DP).terms)
    lf, lg = max(pf), max(pg)
    ef, eg = P.decode(lf), P.decode(lg)
    lcm = P.encode(tuple(max(a, b) for a, b in zip(ef, eg)))
    tf = [(k, v) for k, v in pf.items() if k != lf]
    tg = [(k, v) for k, v in pg.items() if k != lg]
    assert py.spoly(lf, tf, lg, tg, lcm) == cy.spoly(lf, tf, lg, tg, lcm)
