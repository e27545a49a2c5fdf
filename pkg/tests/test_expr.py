from fractions import Fraction

import pytest

from mod2red.errors import NonSquareFree, ParseError, UnsupportedCompositum, UnsupportedDegree
from mod2red.expr import format_expr, parse_a2, parse_expr


def test_sqrt2():
    tw, a = parse_a2("sqrt(2)")
    assert tw.degree == 2 and a.valuation() == Fraction(1, 2)


def test_kummer_degree_four():
    tw, a = parse_a2("2^(3/4)")
    assert tw.e == 4 and a.valuation() == Fraction(3, 4)


def test_mixed_families_rejected():
    with pytest.raises(UnsupportedCompositum):
        parse_a2("sqrt(2)+zeta3")


@pytest.mark.parametrize("src", ["sqrt(2", "2**", "", "sqrt(x)", "3 4", "2^(1/0)"])
def test_parse_errors(src):
    with pytest.raises((ParseError, ZeroDivisionError, ValueError)):
        parse_a2(src)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_expr("6+*2")
    assert info.value.position == 2


def test_square_free_required():
    with pytest.raises(NonSquareFree):
        parse_a2("sqrt(12)")


def test_kummer_degree_cap():
    with pytest.raises(UnsupportedDegree):
        parse_a2("2^(1/9)")


def test_unary_minus_binds_tighter_than_power():
    # (-2)^2 = 4, not -(2^2)
    assert parse_a2("-2^2")[1].to_rational() == 4


@pytest.mark.parametrize("src,value", [
    ("1+2*3", 7), ("(1+2)*3", 9), ("12/4-1", 2), ("-3*-2", 6),
])
def test_precedence(src, value):
    assert parse_a2(src)[1].to_rational() == value


@pytest.mark.parametrize("src,d", [("sqrt(6)", 6), ("sqrt(3)", 3), ("sqrt(7)", 7),
                                   ("sqrt(226)", 226), ("sqrt(-3)", -3), ("sqrt(17)", 17),
                                   ("sqrt(5)", 5), ("sqrt(-7)", -7)])
def test_square_roots_square_back(src, d):
    _, a = parse_a2(src)
    diff = a * a - d
    assert diff.is_certified_zero() or diff.lower_valuation() >= 40


def test_zeta3_is_a_cube_root_of_unity():
    _, z = parse_a2("zeta3")
    assert (z * z + z + 1).is_certified_zero()


def test_format_round_trip_fixture_strings():
    for src in ["sqrt(2)", "13*sqrt(2)", "6+5*sqrt(2)", "8-sqrt(226)", "2^(1/7)",
                "-10+2*sqrt(178)", "2*zeta3", "46"]:
        again = format_expr(parse_expr(src))
        assert (parse_a2(again)[1] - parse_a2(src)[1]).is_certified_zero()
