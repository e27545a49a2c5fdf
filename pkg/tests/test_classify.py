import importlib
from fractions import Fraction

import pytest

from mod2red.classify import (
    AutomorphicKind, AutomorphicSide, ReductionResult, Variant, classify, llc_inverse,
    llc_translate, parameters, verify_witness, witness_agrees_with_classify, witness_function,
)
from mod2red.errors import SlopeOutOfRange, UnsupportedRegime, WeightTooSmall
from mod2red.gf2m import FiniteField
from mod2red.symmod import SymPoly
from mod2red.tree import g1

F2 = FiniteField(1)


def test_parameters_slope_below_one(a2):
    p = parameters(4, a2("sqrt(2)"))
    assert (p.tau_prime, p.t_slope_lt1) == (Fraction(-1, 2), 0)
    p = parameters(11, a2("8+sqrt(226)"))
    assert (p.tau_prime, p.t_slope_lt1) == (3, 3)


def test_parameters_slope_one(a2):
    p = parameters(6, a2("2*sqrt(3)"))
    assert (p.tau, p.t_slope1 - 1) == (0, 0)


def test_k5_sqrt2_reducible_with_lambda_one(a2):
    res = classify(5, a2("sqrt(2)"))
    assert res.variant is Variant.Reducible
    assert res.c.is_zero()
    assert res.roots[0] == res.roots[1] == F2.one()


def test_k8_two_zeta3(a2):
    res = classify(8, a2("2*zeta3"))
    z = FiniteField(2).gen()
    assert res.is_reducible and res.c == z
    lam, mu = res.roots
    assert lam * lam + z * lam + 1 == lam.field.zero()
    assert lam * mu == lam.field.one()


def test_k7_six_irreducible(a2):
    assert classify(7, a2("6")).variant is Variant.Irreducible


def test_k10_46_flag(a2):
    res = classify(10, a2("46"))
    assert res.is_reducible and res.c.is_zero() and res.v0_contribution_possible


def test_errors(a2):
    with pytest.raises(WeightTooSmall):
        classify(3, a2("sqrt(2)"))
    with pytest.raises(SlopeOutOfRange):
        classify(6, a2("4"))
    with pytest.raises(SlopeOutOfRange):
        classify(6, a2("3"))
    with pytest.raises(UnsupportedRegime):
        witness_function(5, a2("12"))


def test_llc_dictionary():
    assert llc_translate(AutomorphicSide(AutomorphicKind.PiZeroZero)).variant is Variant.Irreducible
    assert llc_translate(AutomorphicSide(AutomorphicKind.Pi1Zero)).variant is Variant.Irreducible
    pair = llc_translate(AutomorphicSide.from_lambda(F2.one()))
    assert pair.is_reducible and pair.roots == (F2.one(), F2.one())
    for res in (ReductionResult.irreducible(), ReductionResult.reducible(FiniteField(2).gen())):
        assert llc_translate(llc_inverse(res)).same_galois_object(res)


def test_witness_k4_components(a2):
    # every component other than f_1 and f_-1 vanishes modulo the maximal ideal
    f = witness_function(4, a2("sqrt(2)"))
    for v, p in f:
        vals = [c.valuation() for c in p.coeffs if not c.is_certified_zero()]
        if v.radius in (1, -1):
            assert min(vals) <= 0
        else:
            assert min(vals) > 0


def test_frodd_shape(a2):
    f = witness_function(7, a2("6"))
    assert f.radii() == [1]
    assert len(f) == 2


@pytest.mark.parametrize("k,src,gen", [
    (5, "sqrt(2)", "(T^2+(0)T+1)[1,1]"),
    (4, "sqrt(2)", "T[1,1]"),
    (9, "2*zeta3", "T[1,X]"),
])
def test_verify_witness_examples(a2, k, src, gen):
    rep = verify_witness(k, a2(src))
    assert rep["verified"]
    assert rep["generator"] == gen


def test_witness_negative_control(a2, monkeypatch):
    cl = importlib.import_module("mod2red.classify")
    real = cl.witnesses

    def broken(k, x, extra_radii=0):
        ws = real(k, x, extra_radii)
        one = SymPoly(0, (F2.one(),), F2)
        ws[-1].expected = ws[-1].expected + type(ws[-1].expected).elementary(g1(3, 1), one)
        return ws
    monkeypatch.setattr(cl, "witnesses", broken)
    assert not verify_witness(4, a2("sqrt(2)"))["verified"]


@pytest.mark.parametrize("k,src", [(4, "sqrt(2)"), (6, "2*sqrt(3)"), (8, "2*zeta3"), (10, "46"),
                                   (12, "2"), (13, "2*sqrt(3)"), (11, "8+sqrt(226)")])
def test_witness_agrees_with_classify(a2, k, src):
    assert witness_agrees_with_classify(k, a2(src)) is True
