import random
from fractions import Fraction

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from mod2red.classify import classify, parameters, verify_witness, witness_agrees_with_classify
from mod2red.expr import format_expr, parse_a2, parse_expr
from mod2red.field2adic import INFINITY, build_tower, embed_rational
from mod2red.gf2m import FiniteField, solve_unit_quadratic
from mod2red.symmod import Mat2, SymPoly, act
from mod2red.tree import hecke, hecke_by_definition, random_tree_function

from strategies import element, half_slope, kummer_slope, odd, slope_below_one, slope_one

SETTINGS = settings(max_examples=200, deadline=None,
                    suppress_health_check=[HealthCheck.too_slow])


def v2(n):
    return (n & -n).bit_length() - 1


# --- 2-adic arithmetic ------------------------------------------------------

towers = st.sampled_from([
    build_tower(1, 1, None, 48), build_tower(1, 2, None, 48), build_tower(2, 1, None, 48),
    build_tower(1, 3, None, 48), build_tower(2, 2, None, 48), build_tower(1, 2, [-6, 0, 1], 48),
])


@st.composite
def exact_elements(draw, tower=None):
    tw = tower or draw(towers)
    coeffs = draw(st.lists(st.fractions(max_denominator=16).map(lambda q: q.limit_denominator(16)),
                           min_size=tw.degree, max_size=tw.degree))
    return tw.element(coeffs)


@SETTINGS
@given(towers.flatmap(lambda tw: st.tuples(exact_elements(tw), exact_elements(tw))))
def test_valuation_laws(pair):
    a, b = pair
    assume(not a.is_certified_zero() and not b.is_certified_zero())
    assert (a * b).valuation() == a.valuation() + b.valuation()
    s = a + b
    if not s.is_certified_zero():
        assert s.valuation() >= min(a.valuation(), b.valuation())
        if a.valuation() != b.valuation():
            assert s.valuation() == min(a.valuation(), b.valuation())


def _unit_part(a):
    return a / a.tower.pi() ** int(a.valuation() * a.tower.e)


@SETTINGS
@given(towers.flatmap(lambda tw: st.tuples(exact_elements(tw), exact_elements(tw))))
def test_residue_is_multiplicative_on_units(pair):
    a, b = pair
    assume(not a.is_certified_zero() and not b.is_certified_zero())
    ua, ub = _unit_part(a), _unit_part(b)
    assert ua.valuation() == 0 and not ua.residue().is_zero()
    assert (ua * ub).residue() == ua.residue() * ub.residue()


@SETTINGS
@given(towers, st.integers(-10**6, 10**6).filter(bool), st.integers(1, 10**6))
def test_embed_rational_valuation(tw, p, q):
    assert embed_rational(tw, Fraction(p, q)).valuation() == v2(abs(p)) - v2(q)


@SETTINGS
@given(half_slope(), st.integers(20, 40))
def test_precision_does_not_change_certified_answers(src, prec):
    lo, hi = parse_a2(src, prec)[1], parse_a2(src, prec + 40)[1]
    assert lo.valuation() == hi.valuation()
    assert (lo / lo.tower.pi()).residue() == (hi / hi.tower.pi()).residue()


# --- finite fields ----------------------------------------------------------

@SETTINGS
@given(st.integers(1, 4).flatmap(lambda m: st.integers(0, (1 << m) - 1).map(lambda b: FiniteField(m)(b))))
def test_unit_quadratic_vieta(c):
    lam, mu = solve_unit_quadratic(c)
    assert lam * mu == lam.field.one()
    assert lam + mu == c


# --- symmetric powers -------------------------------------------------------

ints = st.integers(-5, 5)
mats = st.tuples(ints, ints, ints, ints).map(lambda t: Mat2(*t))


@SETTINGS
@given(mats, mats, st.integers(0, 10).flatmap(lambda r: st.lists(st.integers(-9, 9), min_size=r + 1, max_size=r + 1)))
def test_action_is_a_group_action(m1, m2, cs):
    p = SymPoly.from_ints(cs)
    assert act(m1, act(m2, p)) == act(m1 @ m2, p)


# --- tree -------------------------------------------------------------------

@SETTINGS
@given(st.integers(0, 2**32))
def test_rules_match_definition(seed):
    rng = random.Random(seed)
    f = random_tree_function(rng, rng.randint(0, 6), size=rng.randint(1, 4))
    assert hecke(f) == hecke_by_definition(f)


# --- classification ---------------------------------------------------------

@SETTINGS
@given(st.integers(2, 20).map(lambda n: 2 * n),
       st.sampled_from([Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)]).flatmap(kummer_slope))
def test_even_weight_below_slope_one_is_irreducible(k, src):
    assert not classify(k, element(src)).is_reducible


@SETTINGS
@given(st.integers(4, 60), slope_below_one())
def test_reducible_below_slope_one_needs_odd_weight_and_half_slope(k, src):
    a = element(src)
    if classify(k, a).is_reducible:
        assert k % 2 == 1 and a.valuation() == Fraction(1, 2)


@SETTINGS
@given(st.integers(2, 30).map(lambda n: 2 * n + 1), slope_one())
def test_odd_weight_at_slope_one_is_irreducible(k, src):
    assert not classify(k, element(src)).is_reducible


@SETTINGS
@given(st.integers(4, 60), slope_below_one())
def test_rem1_quantity(k, src):
    a = element(src)
    p = parameters(k, a)
    x = (a * a - 2 * p.r) / (a * a * p.beta)
    vx = INFINITY if x.is_certified_zero() else x.valuation()
    assert vx >= 0
    if p.tau_prime >= p.t_slope_lt1:
        assert vx == 0 and x.residue() == (a * a).inverse().scale(2).residue()
    else:
        assert vx > 0


@SETTINGS
@given(st.integers(4, 60), slope_one())
def test_sl1par_quantities(k, src):
    a = element(src)
    p = parameters(k, a)
    assume(p.c1 is not None)
    r = p.r
    assert p.c1.valuation() >= 0 and p.c2.valuation() >= 0
    if p.tau <= p.t_slope1 - 1:
        assert p.c1.residue() == a.inverse().scale(2).residue()
        if not p.alpha.is_certified_zero():
            assert p.c2.residue() == (1 + (a * p.alpha).inverse().scale(r - 2)).residue()
    else:
        assert p.c1.residue() == (a * a).inverse().scale(4 * r).residue()
        assert p.c2.residue() == a.inverse().scale(2 * (r + 1)).residue()


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.integers(4, 16), st.one_of(half_slope(), slope_one(), kummer_slope(Fraction(1, 3))))
def test_witness_and_classification_agree(k, src):
    assert witness_agrees_with_classify(k, element(src)) is True


# --- expressions ------------------------------------------------------------

def _expr_tree():
    leaf = st.one_of(st.integers(0, 50).map(str), st.just("sqrt(6)"))
    return st.recursive(
        leaf,
        lambda kids: st.one_of(
            st.tuples(kids, st.sampled_from("+-*"), kids).map(lambda t: f"({t[0]}){t[1]}({t[2]})"),
            kids.map(lambda s: f"-({s})"),
            st.tuples(kids, st.integers(0, 3)).map(lambda t: f"({t[0]})^{t[1]}"),
        ),
        max_leaves=8,
    )


@SETTINGS
@given(_expr_tree())
def test_format_then_parse_round_trips(src):
    node = parse_expr(src)
    assert parse_expr(format_expr(node)) == node
    assert (parse_a2(format_expr(node), 32)[1] - parse_a2(src, 32)[1]).is_certified_zero()
