from fractions import Fraction

import pytest

from mod2red.errors import DivisionByZero, InsufficientPrecision, NotEisenstein, UnsupportedDegree
from mod2red.field2adic import INFINITY, arith, build_tower, embed_rational, residue, valuation


def test_sqrt2_tower():
    tw = build_tower(1, 2, [-2, 0, 1], 64)
    assert tw.degree == 2
    assert valuation(tw.pi()) == Fraction(1, 2)


def test_zeta3_tower_has_f4_residue_field():
    tw = build_tower(2, 1, None, 64)
    assert tw.residue_field.degree == 2
    z = residue(tw.omega())
    assert z * z + z + 1 == tw.residue_field.zero()


def test_x2_minus_178_is_eisenstein():
    # 178 = 2 * 89, so the constant term has valuation exactly one
    tw = build_tower(1, 2, [-178, 0, 1], 64)
    assert valuation(tw.pi()) == Fraction(1, 2)


@pytest.mark.parametrize("spec", [[-4, 0, 1], [1, 0, 1], [-2, 1, 1], [-2, 0, 2]])
def test_non_eisenstein_rejected(spec):
    with pytest.raises(NotEisenstein):
        build_tower(1, 2, spec, 64)


def test_degree_cap():
    with pytest.raises(UnsupportedDegree):
        build_tower(3, 3, None, 64)


def test_sqrt2_squared(a2):
    s = a2("sqrt(2)")
    prod = arith(s, s, "mul")
    assert prod.equals(s.tower.from_rational(2))
    assert valuation(prod) == 1


def test_conjugate_product(a2):
    p, m = a2("8+sqrt(226)"), a2("8-sqrt(226)")
    # integer oracle: 8^2 - 226
    assert (p * m).to_rational() == 8 * 8 - 226 == -162


def test_division_by_zero():
    tw = build_tower(1, 1, None, 64)
    with pytest.raises(DivisionByZero):
        arith(tw.one(), tw.zero(), "div")


@pytest.mark.parametrize("src,val", [
    ("sqrt(2)", Fraction(1, 2)),
    ("8+sqrt(226)", Fraction(1, 2)),
    ("6+5*sqrt(2)", Fraction(1, 2)),
    ("2*zeta3", 1),
    ("2^(3/4)", Fraction(3, 4)),
    ("46", 1),
])
def test_valuations(a2, src, val):
    assert valuation(a2(src)) == val


def test_residues(a2):
    z = a2("zeta3")
    F = z.tower.residue_field
    assert residue(z) == F.gen()
    assert residue(a2("-5+sqrt(178)")) == F.one()
    assert residue(a2("2")).is_zero()


def test_embed_rational_valuation():
    tw = build_tower(1, 2, None, 64)
    assert valuation(embed_rational(tw, Fraction(12, 5))) == 2
    assert valuation(embed_rational(tw, Fraction(3, 8))) == -3
    assert valuation(tw.zero()) == INFINITY


def test_inexact_zero_is_not_certified(a2):
    # sqrt(17) lives in Q_2, so it is only known to finite precision
    x = a2("sqrt(17)", precision=24)
    diff = x * x - 17
    assert not diff.is_certified_zero()
    with pytest.raises(InsufficientPrecision):
        diff.valuation()


def test_precision_does_not_move_valuations(a2):
    for src in ("1+sqrt(17)", "3+sqrt(17)", "sqrt(33)-1"):
        assert a2(src, 24).valuation() == a2(src, 80).valuation()
        assert a2(src, 24).residue() == a2(src, 80).residue()
