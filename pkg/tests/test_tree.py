import random

import pytest

from mod2red.errors import NonIntegral
from mod2red.expr import parse_a2
from mod2red.gf2m import FiniteField
from mod2red.rings import ZZ
from mod2red.symmod import Mat2, Quotient, SubmoduleSpec, SymPoly, member, special_poly, theta
from mod2red.tree import (
    CENTER, TreeFunction, Vertex, coset_identities, g0, g1, hecke, hecke_by_definition,
    hecke_minus, hecke_plus, left_translate, postprocess, random_tree_function,
    reduce_mod_wp, selftest, support_geometry_ok, transfer_check, truncate,
)

F2 = FiniteField(1)


@pytest.mark.parametrize("lam,n,out", [(5, 3, 1), (1, 1, 0), (3, 2, 1)])
def test_truncate(lam, n, out):
    assert truncate(lam, n) == out


def test_vertex_validation():
    with pytest.raises(ValueError):
        Vertex(0, 2, 4)
    with pytest.raises(ValueError):
        Vertex(2, 0, 0)
    assert g1(0, 0).radius == -1 and g0(3, 5).radius == 3


def test_hecke_of_center_by_hand():
    # T[1, X] = [g0(1,0), X] + [g0(1,1), X] + [g1(0,0), 2X] for r = 1
    x = SymPoly.monomial(1, 0)
    got = hecke(TreeFunction.elementary(CENTER, x))
    want = TreeFunction(1, ZZ, {g0(1, 0): x, g0(1, 1): x, g1(0, 0): x.scale(2)})
    assert got == want
    assert got.dump().splitlines()[0].startswith("1/0/0: ")
    assert [line.split(":")[0] for line in got.dump().splitlines()] == ["1/0/0", "0/1/0", "0/1/1"]


def test_coset_identities_hold():
    assert coset_identities(6) == []


@pytest.mark.parametrize("n,lam,p", [
    (0, 0, SymPoly.monomial(4, 1)),
    (1, 1, SymPoly.monomial(3, 3)),
    (2, 3, special_poly("F", 5)),
])
def test_transfer_examples(n, lam, p):
    assert transfer_check(n, lam, p)["holds"]


def test_rules_match_definition():
    rng = random.Random(7)
    for _ in range(200):
        f = random_tree_function(rng, rng.randint(0, 6), size=3)
        assert hecke(f) == hecke_by_definition(f)


def test_central_element_acts_trivially():
    rng = random.Random(3)
    two = Mat2(2, 0, 0, 2)
    for _ in range(100):
        f = random_tree_function(rng, rng.randint(0, 6))
        assert left_translate(two, f) == f
        assert hecke(left_translate(two, f)) == hecke(f)


def test_geometry_and_additivity():
    rng = random.Random(11)
    for _ in range(200):
        r = rng.randint(0, 6)
        f, g = random_tree_function(rng, r), random_tree_function(rng, r)
        assert support_geometry_ok(f)
        assert hecke(f + g) == hecke(f) + hecke(g)
        assert hecke(f) == hecke_plus(f) + hecke_minus(f)


def test_reduce_examples():
    tw, s = parse_a2("sqrt(2)")
    r = 3
    two = SymPoly.monomial(r, 0, tw, tw.from_rational(2))
    assert len(reduce_mod_wp(TreeFunction.elementary(g0(1, 0), two))) == 0
    bad = SymPoly.monomial(r, 0, tw, s.inverse())
    with pytest.raises(NonIntegral) as info:
        reduce_mod_wp(TreeFunction.elementary(g0(1, 0), bad))
    assert info.value.vertex == g0(1, 0)

    tz, z = parse_a2("zeta3")
    red = reduce_mod_wp(TreeFunction.elementary(CENTER, SymPoly.monomial(r, 0, tz, z)))
    assert red.entries[CENTER].coeffs[0] == tz.residue_field.gen()


def test_postprocess_gives_t_of_center():
    r = 5
    f = TreeFunction(r, F2, {
        g0(1, 0): SymPoly.monomial(r, 1, F2),
        g0(1, 1): SymPoly.monomial(r, 1, F2),
        g1(0, 0): SymPoly.monomial(r, r - 1, F2),
    })
    one = SymPoly(0, (F2.one(),), F2)
    assert postprocess(f, Quotient.VrModVr1_to_V0) == hecke(TreeFunction.elementary(CENTER, one))
    assert len(postprocess(TreeFunction(r, F2), Quotient.VrModVr1_to_V0)) == 0


def test_postprocess_theta_route():
    r = 7
    th = theta(ZZ).map(F2.from_int, F2) * SymPoly.monomial(r - 3, 1, F2)
    out = postprocess(TreeFunction.elementary(g0(1, 0), th), Quotient.ThetaQuot_to_V1)
    assert out == TreeFunction.elementary(g0(1, 0), SymPoly(1, (F2.one(), F2.one()), F2))


@pytest.mark.parametrize("r", range(2, 11))
def test_image_of_xr_stays_in_xr(r):
    # (T - a)[1, X^r] with v(a) > 0 reduces into the span of the orbit of X^r
    tw, a = parse_a2("2")
    f = TreeFunction.elementary(CENTER, SymPoly.monomial(r, 0, tw))
    red = reduce_mod_wp(hecke(f) - f.scale(a))
    assert all(member(p, SubmoduleSpec.Xr) for _, p in red)


def test_selftest_small():
    rep = selftest(seed=1, n_max=4, payloads=20, functions=50)
    assert rep["ok"]
