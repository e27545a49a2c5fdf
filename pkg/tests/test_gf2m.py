import itertools

import pytest

from mod2red.gf2m import FiniteField, embed, format_unit_quadratic, is_irreducible, solve_unit_quadratic


def brute_roots(c):
    """All roots of x^2 + c x + 1 in the field of degree 2m, by enumeration."""
    host = FiniteField(2 * c.field.degree)
    cc = embed(c, host)
    return {x for x in host.elements() if x * x + cc * x + 1 == host.zero()}


def test_field_orders():
    for m in (1, 2, 3, 4, 8):
        F = FiniteField(m)
        assert len(list(F.elements())) == 1 << m
        assert is_irreducible(F.modulus)


def test_embed_one():
    F16 = FiniteField(4)
    assert embed(FiniteField(1).one(), F16) == F16.one()


def test_embedding_is_a_ring_map():
    F4, F16 = FiniteField(2), FiniteField(4)
    for a, b in itertools.product(F4.elements(), repeat=2):
        assert embed(a * b, F16) == embed(a, F16) * embed(b, F16)
        assert embed(a + b, F16) == embed(a, F16) + embed(b, F16)


def test_inverse_and_division():
    F = FiniteField(3)
    for a in F.elements():
        if a:
            assert a * a.inverse() == F.one()
    with pytest.raises(ZeroDivisionError):
        F.one() / F.zero()


def test_c_zero_gives_double_root_one():
    lam, mu = solve_unit_quadratic(FiniteField(1).zero())
    assert lam == mu == lam.field.one()


def test_c_one_gives_zeta3():
    lam, mu = solve_unit_quadratic(FiniteField(1).one())
    assert lam.field.degree == 2
    assert lam != mu and lam * mu == lam.field.one()
    assert lam * lam + lam + 1 == lam.field.zero()


def test_c_zeta3_roots_in_f16():
    z = FiniteField(2).gen()
    lam, mu = solve_unit_quadratic(z)
    assert lam.field.degree == 4
    assert {lam, mu} == brute_roots(z)
    assert lam * mu == lam.field.one()


@pytest.mark.parametrize("m", [1, 2, 3])
def test_exhaustive_agreement_with_brute_force(m):
    for c in FiniteField(m).elements():
        lam, mu = solve_unit_quadratic(c)
        roots = brute_roots(c)
        assert {embed(lam, FiniteField(2 * m)), embed(mu, FiniteField(2 * m))} == roots
        assert lam * mu == lam.field.one()
        assert lam + mu == c


@pytest.mark.parametrize("m", [1, 2, 3])
def test_frobenius_fixes_roots_iff_split(m):
    for c in FiniteField(m).elements():
        lam, _ = solve_unit_quadratic(c)
        fixed = lam
        for _ in range(m):
            fixed = fixed.frobenius()
        split = any(x * x + c * x + 1 == c.field.zero() for x in FiniteField(m).elements())
        assert (fixed == lam) == split


def test_minpoly_strings():
    F4 = FiniteField(2)
    assert format_unit_quadratic(FiniteField(1).zero()) == "x^2+1"
    assert format_unit_quadratic(FiniteField(1).one()) == "x^2+x+1"
    assert format_unit_quadratic(F4.gen()) == "x^2+z*x+1"
