"""Hypothesis strategies producing a2 values with a prescribed slope."""

from fractions import Fraction

from hypothesis import strategies as st

from mod2red.expr import parse_a2

odd = st.integers(-40, 40).map(lambda n: 2 * n + 1)
even = st.integers(-40, 40).map(lambda n: 2 * n)


def element(src):
    return parse_a2(src, 48)[1]


@st.composite
def kummer_slope(draw, nu):
    """u * 2^nu + (higher terms) in the pure Kummer tower of 2^nu."""
    nu = Fraction(nu)
    u = draw(odd)
    tail = draw(even)
    extra = draw(st.integers(0, 5))
    src = f"{u}*2^({nu.numerator}/{nu.denominator})+{tail}"
    if extra:
        src += f"+{2 * extra}*2^({nu.numerator}/{nu.denominator})"
    return src


SQRT_UNIFORMIZERS = (2, 6, 10, 14, 22, 26, 30, 34, 38, 42, 46, 226, 178)
SQRT_UNITS = (3, 7, 11, 15, 19, 23, 31, 35, 43, 47, -1, 5, -3, 17)


@st.composite
def half_slope(draw):
    """Elements of valuation exactly 1/2 in quadratic towers and their Kummer cousins."""
    kind = draw(st.sampled_from(["unif", "shift", "kummer"]))
    if kind == "unif":
        d = draw(st.sampled_from(SQRT_UNIFORMIZERS))
        return f"{draw(odd)}*sqrt({d})+{draw(even)}"
    if kind == "shift":
        # 1 + sqrt(d) with d = 3 mod 4 has valuation 1/2
        d = draw(st.sampled_from([3, 7, 11, 15, 19, 23, 31, 35, 43, 47]))
        return f"{draw(odd)}+{draw(odd)}*sqrt({d})+{2 * draw(even)}*sqrt({d})"
    return draw(kummer_slope(Fraction(1, 2)))


@st.composite
def slope_below_one(draw):
    """Any slope in (0, 1) that the parser can express."""
    if draw(st.booleans()):
        return draw(half_slope())
    q = draw(st.integers(2, 8))
    p = draw(st.integers(1, q - 1))
    return draw(kummer_slope(Fraction(p, q)))


@st.composite
def slope_one(draw):
    """Twice a unit, in a quadratic tower or the unramified ``zeta3`` tower."""
    kind = draw(st.sampled_from(["int", "sqrt_unit", "sqrt_unif", "zeta3"]))
    if kind == "int":
        return f"2*{draw(odd)}"
    if kind == "sqrt_unit":
        d = draw(st.sampled_from(SQRT_UNITS))
        return f"2*({draw(odd)}*sqrt({d})+{draw(even)})"
    if kind == "sqrt_unif":
        d = draw(st.sampled_from(SQRT_UNIFORMIZERS))
        return f"2*({draw(odd)}+{draw(st.integers(-20, 20))}*sqrt({d}))"
    a, b = draw(st.integers(-20, 20)), draw(st.integers(-20, 20))
    # a + b*zeta3 is a unit unless a and b are both even
    if a % 2 == 0 and b % 2 == 0:
        a += 1
    return f"2*({a}+{b}*zeta3)"
