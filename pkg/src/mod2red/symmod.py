"""Homogeneous polynomials Sym^r with the GL_2 substitution action, the
theta filtration over F_{2^f}, the quotient maps onto V_0 and V_1, the
special polynomials F, G, H, H', H'', K, theta, and integer-exact checks of
the binomial and polynomial congruences they satisfy."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .errors import DegreeTooSmall, NotDivisible, NotInSubmodule, OutOfRange, RingMismatch
from .field2adic import ExtElement, ExtensionTower, v2
from .gf2m import FFElement, FiniteField
from .rings import ZZ, Ring, is_zero, looks_zero, scale

# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class Mat2:
    """The matrix ``[[a, b], [c, d]]`` with rational entries."""

    a: int | Fraction
    b: int | Fraction
    c: int | Fraction
    d: int | Fraction

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def det(self):
        return self.a * self.d - self.b * self.c

    def scaled(self, s) -> "Mat2":
        return Mat2(self.a * s, self.b * s, self.c * s, self.d * s)

    def inverse(self) -> "Mat2":
        det = Fraction(self.det())
        if det == 0:
            raise ZeroDivisionError("singular matrix")
        return Mat2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def normalized(self) -> "Mat2":
        """Entries as Fractions reduced to ints where possible."""
        def n(x):
            x = Fraction(x)
            return x.numerator if x.denominator == 1 else x
        return Mat2(n(self.a), n(self.b), n(self.c), n(self.d))

    def __repr__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


IDENTITY = Mat2(1, 0, 0, 1)
W = Mat2(0, 1, 1, 0)
LOWER_UNIPOTENT = Mat2(1, 0, 1, 1)
UPPER_UNIPOTENT = Mat2(1, 1, 0, 1)

# GL_2(F_2), as integer lifts
GL2F2 = (
    Mat2(1, 0, 0, 1),
    Mat2(0, 1, 1, 0),
    Mat2(1, 1, 0, 1),
    Mat2(1, 0, 1, 1),
    Mat2(0, 1, 1, 1),
    Mat2(1, 1, 1, 0),
)


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class SymPoly:
    """``sum_j coeffs[j] * X^(r-j) * Y^j`` over ``ring``."""

    r: int
    coeffs: tuple
    ring: object

    def __post_init__(self):
        if len(self.coeffs) != self.r + 1:
            raise ValueError(f"degree {self.r} needs {self.r + 1} coefficients")

    # constructors
    @classmethod
    def zero(cls, r: int, ring: Ring = ZZ) -> "SymPoly":
        return cls(r, tuple(ring.zero() for _ in range(r + 1)), ring)

    @classmethod
    def monomial(cls, r: int, j: int, ring: Ring = ZZ, coeff=None) -> "SymPoly":
        if not 0 <= j <= r:
            raise ValueError(f"no monomial X^{r - j}Y^{j} in degree {r}")
        cs = [ring.zero()] * (r + 1)
        cs[j] = ring.one() if coeff is None else coeff
        return cls(r, tuple(cs), ring)

    @classmethod
    def from_ints(cls, ints: Sequence, ring: Ring = ZZ) -> "SymPoly":
        return cls(len(ints) - 1, tuple(ring.from_rational(x) for x in ints), ring)

    # arithmetic
    def _check(self, other: "SymPoly"):
        if not isinstance(other, SymPoly):
            raise TypeError("expected SymPoly")
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
        if other.r != self.r:
            raise ValueError(f"degree mismatch {self.r} vs {other.r}")

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        return SymPoly(self.r, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)), self.ring)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        return SymPoly(self.r, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)), self.ring)

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.r, tuple(-x for x in self.coeffs), self.ring)

    def scale(self, s) -> "SymPoly":
        """Multiply by a ring element or a rational number."""
        if isinstance(s, (int, Fraction)):
            return SymPoly(self.r, tuple(scale(self.ring, x, s) for x in self.coeffs), self.ring)
        return SymPoly(self.r, tuple(x * s for x in self.coeffs), self.ring)

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            out = [self.ring.zero()] * (self.r + other.r + 1)
            for i, x in enumerate(self.coeffs):
                if is_zero(x):
                    continue
                for j, y in enumerate(other.coeffs):
                    if not is_zero(y):
                        out[i + j] = out[i + j] + x * y
            return SymPoly(self.r + other.r, tuple(out), self.ring)
        return self.scale(other)

    __rmul__ = scale

    def swap(self) -> "SymPoly":
        """``P(Y, X)``."""
        return SymPoly(self.r, tuple(reversed(self.coeffs)), self.ring)

    def is_zero(self) -> bool:
        return all(is_zero(c) for c in self.coeffs)

    def looks_zero(self) -> bool:
        return all(looks_zero(c) for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.r == other.r and self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.r, self.coeffs))

    def map(self, fn, ring: Ring) -> "SymPoly":
        return SymPoly(self.r, tuple(fn(c) for c in self.coeffs), ring)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"SymPoly(r={self.r}, {self})"


def _coeff_str(c) -> str:
    s = str(c)
    if isinstance(c, (int, Fraction)):
        return s
    if isinstance(c, ExtElement) and c.prec is None and not any(c.coeffs[1:]):
        return str(c.coeffs[0])
    if any(ch in s for ch in "+- ") or " " in s:
        return f"({s})"
    return s


def _is_one(c) -> bool:
    if isinstance(c, ExtElement):
        return c.prec is None and c.coeffs[0] == 1 and not any(c.coeffs[1:])
    if isinstance(c, FFElement):
        return c.bits == 1
    return c == 1


def format_poly(p: SymPoly) -> str:
    terms = []
    for j, c in enumerate(p.coeffs):
        if is_zero(c):
            continue
        xe, ye = p.r - j, j
        mono = []
        if xe:
            mono.append("X" if xe == 1 else f"X^{xe}")
        if ye:
            mono.append("Y" if ye == 1 else f"Y^{ye}")
        mono_s = "*".join(mono)
        if not mono_s:
            terms.append(_coeff_str(c))
        elif _is_one(c):
            terms.append(mono_s)
        else:
            terms.append(f"{_coeff_str(c)}*{mono_s}")
    return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# the action


@lru_cache(maxsize=4096)
def _transform(a, b, c, d, r: int) -> tuple[tuple, ...]:
    """Row ``j`` holds the coefficients of ``(aX+cY)^(r-j) (bX+dY)^j``."""
    def powers(u, v, n):
        # coefficients of (uX + vY)^n in the basis X^(n-i) Y^i
        return [comb(n, i) * u ** (n - i) * v ** i for i in range(n + 1)]

    rows = []
    for j in range(r + 1):
        left = powers(a, c, r - j)
        right = powers(b, d, j)
        row = [0] * (r + 1)
        for i, x in enumerate(left):
            if x:
                for k, y in enumerate(right):
                    if y:
                        row[i + k] += x * y
        rows.append(tuple(row))
    return tuple(rows)


def act(m: Mat2, p: SymPoly) -> SymPoly:
    """``(m . p)(X, Y) = p(aX + cY, bX + dY)``."""
    m = m.normalized()
    if isinstance(p.ring, FiniteField):
        # over F_{2^f} only the image in GL_2(F_2) matters
        m = Mat2(*(_mod2(x) for x in (m.a, m.b, m.c, m.d)))
    rows = _transform(m.a, m.b, m.c, m.d, p.r)
    ring = p.ring
    out = [ring.zero()] * (p.r + 1)
    touched = [False] * (p.r + 1)
    for j, pj in enumerate(p.coeffs):
        if is_zero(pj):
            continue
        for k, t in enumerate(rows[j]):
            if t:
                out[k] = out[k] + (pj if t == 1 else scale(ring, pj, t))
                touched[k] = True
    return SymPoly(p.r, tuple(out), ring)


def _mod2(x) -> int:
    x = Fraction(x)
    if x.denominator % 2 == 0:
        raise ValueError(f"{x} is not 2-integral")
    return x.numerator % 2


def subst(p: SymPoly, x_img: tuple, y_img: tuple) -> SymPoly:
    """Substitute ``X -> x_img[0] X + x_img[1] Y`` and ``Y -> y_img[0] X + y_img[1] Y``."""
    return act(Mat2(x_img[0], y_img[0], x_img[1], y_img[1]), p)


def embed_poly(p: SymPoly, ring: Ring) -> SymPoly:
    """Coerce an integer polynomial into another ring."""
    if p.ring == ring:
        return p
    if p.ring is not ZZ:
        raise RingMismatch("only integer polynomials can be coerced")
    return SymPoly(p.r, tuple(ring.from_int(c) for c in p.coeffs), ring)


# ---------------------------------------------------------------------------
# special polynomials


def delta(r: int) -> int:
    """1 for even ``r``, 0 for odd ``r``."""
    return 1 if r % 2 == 0 else 0


def digit_sum2(n: int) -> int:
    return bin(n).count("1")


_MIN_DEGREE = {"F": 2, "G": 2, "H": 2, "Hprime": 2, "Hdoubleprime": 2, "K": 6, "theta": 3}


def special_int_coeffs(name: str, r: int) -> list[int]:
    if name not in _MIN_DEGREE:
        raise ValueError(f"unknown special polynomial {name!r}")
    if name == "theta":
        if r != 3:
            raise DegreeTooSmall("theta is defined in degree 3")
        return [0, 1, -1, 0]
    if r < _MIN_DEGREE[name]:
        raise DegreeTooSmall(f"{name} needs r >= {_MIN_DEGREE[name]}, got {r}")
    cs = [0] * (r + 1)
    if name == "F":
        cs[r] += 1
        cs[1] -= 1
    elif name == "G":
        cs[0] += 1
        cs[r - 1] -= 1
    elif name in ("H", "Hprime", "Hdoubleprime"):
        for j in range(1, r):
            cs[j] = comb(r, j)
        if name == "Hprime":
            cs[1] -= r
            cs[2] -= r
        elif name == "Hdoubleprime":
            cs[r - 1] -= r
            cs[r - 2] -= r
    elif name == "K":
        for j in range(3, r - 2):
            cs[j] = comb(r - 1, j) + comb(r - 2, j)
    return cs


def special_poly(name: str, r: int = 3, ring: Ring = ZZ) -> SymPoly:
    """One of F, G, H, Hprime, Hdoubleprime, K, theta in degree ``r``."""
    return embed_poly(SymPoly(r, tuple(special_int_coeffs(name, r)), ZZ), ring)


def theta(ring: Ring = ZZ) -> SymPoly:
    return special_poly("theta", 3, ring)


def theta_divide(p: SymPoly, n: int = 1) -> SymPoly:
    """Exact quotient of ``p`` by ``theta^n`` where ``theta = XY(X - Y)``."""
    q = p
    for _ in range(n):
        q = _theta_divide_once(q)
    return q


def _theta_divide_once(p: SymPoly) -> SymPoly:
    r = p.r
    if r < 3:
        raise NotDivisible(f"degree {r} polynomial is not divisible by theta")
    c = p.coeffs
    if not (looks_zero(c[0]) and looks_zero(c[r])):
        raise NotDivisible("not divisible by XY")
    mid = list(c[1:r])  # quotient by XY, degree r-2, coefficient j <-> X^(r-2-j) Y^j
    # divide by (X - Y): a_j = q_j - q_{j-1}
    q = []
    acc = p.ring.zero()
    for a in mid[:-1]:
        acc = acc + a
        q.append(acc)
    if not looks_zero(acc + mid[-1]):
        raise NotDivisible("not divisible by X - Y")
    return SymPoly(r - 3, tuple(q), p.ring)


# ---------------------------------------------------------------------------
# submodules of V_r over F_{2^f}


class SubmoduleSpec(enum.Enum):
    Vr1 = "Vr1"
    Vr2 = "Vr2"
    Xr = "Xr"
    XrPlusVr1 = "XrPlusVr1"
    Vr2PlusThetaXr3 = "Vr2PlusThetaXr3"
    ThetaXr3 = "ThetaXr3"
    Vr2PlusXr = "Vr2PlusXr"


def _require_ff(p: SymPoly) -> FiniteField:
    if not isinstance(p.ring, FiniteField):
        raise RingMismatch("submodule questions are asked over F_{2^f}")
    return p.ring


def in_vr1(p: SymPoly) -> bool:
    _require_ff(p)
    c = p.coeffs
    total = sum(c, p.ring.zero())
    return c[0].is_zero() and c[-1].is_zero() and total.is_zero()


def in_vr2(p: SymPoly) -> bool:
    _require_ff(p)
    c = p.coeffs
    r = p.r
    if r < 6:
        return p.is_zero()
    ends = (c[0], c[1], c[r - 1], c[r])
    even = sum(c[0::2], p.ring.zero())
    odd = sum(c[1::2], p.ring.zero())
    return all(x.is_zero() for x in ends) and even.is_zero() and odd.is_zero()


def orbit_span(p: SymPoly) -> list[SymPoly]:
    """The six translates of ``p`` under GL_2(F_2)."""
    return [act(g, p) for g in GL2F2]


def _monomials(r: int, field: FiniteField) -> list[SymPoly]:
    return [SymPoly.monomial(r, j, field) for j in range(r + 1)]


def spanning_set(spec: SubmoduleSpec, r: int, field: FiniteField) -> list[SymPoly]:
    """A spanning set of the submodule, built from its definition."""
    th = theta(field)
    if spec is SubmoduleSpec.Vr1:
        return [th * m for m in _monomials(r - 3, field)] if r >= 3 else []
    if spec is SubmoduleSpec.Vr2:
        return [th * th * m for m in _monomials(r - 6, field)] if r >= 6 else []
    if spec is SubmoduleSpec.Xr:
        return orbit_span(SymPoly.monomial(r, 0, field))
    if spec is SubmoduleSpec.ThetaXr3:
        return [th * q for q in orbit_span(SymPoly.monomial(r - 3, 0, field))] if r >= 3 else []
    if spec is SubmoduleSpec.XrPlusVr1:
        return spanning_set(SubmoduleSpec.Xr, r, field) + spanning_set(SubmoduleSpec.Vr1, r, field)
    if spec is SubmoduleSpec.Vr2PlusThetaXr3:
        return spanning_set(SubmoduleSpec.Vr2, r, field) + spanning_set(SubmoduleSpec.ThetaXr3, r, field)
    if spec is SubmoduleSpec.Vr2PlusXr:
        return spanning_set(SubmoduleSpec.Vr2, r, field) + spanning_set(SubmoduleSpec.Xr, r, field)
    raise ValueError(spec)


def _row_reduce(rows: list[list[FFElement]]) -> list[list[FFElement]]:
    """Echelon basis of the row space."""
    basis: list[tuple[int, list[FFElement]]] = []
    for row in rows:
        row = list(row)
        for piv, b in basis:
            if not row[piv].is_zero():
                f = row[piv]
                row = [x + f * y for x, y in zip(row, b)]
        lead = next((i for i, x in enumerate(row) if not x.is_zero()), None)
        if lead is None:
            continue
        inv = row[lead].inverse()
        row = [x * inv for x in row]
        new_basis = []
        for piv, b in basis:
            if not b[lead].is_zero():
                f = b[lead]
                b = [x + f * y for x, y in zip(b, row)]
            new_basis.append((piv, b))
        basis = new_basis + [(lead, row)]
    return [b for _, b in basis]


def span_rank(polys: list[SymPoly]) -> int:
    return len(_row_reduce([list(p.coeffs) for p in polys]))


def in_span(p: SymPoly, gens: list[SymPoly]) -> bool:
    basis = _row_reduce([list(g.coeffs) for g in gens])
    return len(_row_reduce(basis + [list(p.coeffs)])) == len(basis)


def member(p: SymPoly, spec: SubmoduleSpec) -> bool:
    """Whether ``p`` (over F_{2^f}) lies in the named submodule of V_r."""
    field = _require_ff(p)
    if spec is SubmoduleSpec.Vr1:
        return in_vr1(p)
    if spec is SubmoduleSpec.Vr2:
        return in_vr2(p)
    return in_span(p, spanning_set(spec, p.r, field))


# ---------------------------------------------------------------------------
# quotient maps


class Quotient(enum.Enum):
    VrModVr1_to_V0 = "VrModVr1_to_V0"
    ThetaQuot_to_V1 = "ThetaQuot_to_V1"
    ThetaQuot_to_V0 = "ThetaQuot_to_V0"


def quotient_image(p: SymPoly, which: Quotient | str) -> SymPoly:
    """Apply one of the three quotient maps; returns a degree 0 or 1 polynomial."""
    which = Quotient(which)
    field = _require_ff(p)
    r = p.r
    if which is Quotient.VrModVr1_to_V0:
        total = sum(p.coeffs[1:r], field.zero())
        return SymPoly(0, (total,), field)
    if r < 4:
        raise DegreeTooSmall("theta quotients need r >= 4")
    if not in_vr1(p):
        raise NotInSubmodule("polynomial is not in V_r^(1)")
    q = theta_divide(p).coeffs
    s = len(q) - 1  # = r - 3
    middle = sum(q[1:s], field.zero())
    if which is Quotient.ThetaQuot_to_V0:
        return SymPoly(0, (middle,), field)
    return SymPoly(1, (q[0] + middle, q[s] + middle), field)


def strip_xr(p: SymPoly) -> SymPoly:
    """Remove the ``X^r`` and ``Y^r`` terms, which lie in ``X_r``."""
    cs = list(p.coeffs)
    cs[0] = p.ring.zero()
    cs[-1] = p.ring.zero()
    return SymPoly(p.r, tuple(cs), p.ring)


# ---------------------------------------------------------------------------
# congruence lemmas


LEMMAS = ("CMB1", "CMB2", "sl1cmb1", "sl1cmb2", "F", "H", "Hprime", "Heven", "K")
_LEMMA_MIN_R = {
    "CMB1": 2, "CMB2": 2, "F": 2, "H": 2, "Hprime": 2,
    "sl1cmb1": 3, "sl1cmb2": 4, "Heven": 3, "K": 6,
}


def _v2int(n: int) -> float | int:
    return int(v2(n)) if n else float("inf")


def lemma_t(lemma_id: str, r: int) -> int:
    """``v(r-1)`` for the slope-below-one lemmas, ``v(r-2)`` for the slope-one ones."""
    if lemma_id in ("CMB1", "CMB2", "F", "H", "Hprime"):
        return _v2int(r - 1)
    return _v2int(r - 2)


def _poly_from_terms(r: int, terms: dict[int, int]) -> SymPoly:
    cs = [0] * (r + 1)
    for j, c in terms.items():
        cs[j] += c
    return SymPoly(r, tuple(cs), ZZ)


def _compare(part: str, lhs: SymPoly, rhs: SymPoly, modulus: int) -> list[dict]:
    bad = []
    for j, (x, y) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if (x - y) % modulus:
            bad.append({
                "part": part,
                "monomial": f"X^{lhs.r - j}Y^{j}",
                "lhs": x,
                "rhs": y,
                "modulus": modulus,
            })
    return bad


def v2_binomial(n: int, k: int) -> int:
    """``v(C(n, k))`` for ``0 <= k <= n`` via Kummer's carry count."""
    return digit_sum2(k) + digit_sum2(n - k) - digit_sum2(n)


def _binomial_check(r: int, top: int, lo: int, hi: int, bound: int, part: str) -> list[dict]:
    bad = []
    for n in range(lo, hi + 1):
        if n > top:
            continue  # the binomial vanishes, so its valuation is infinite
        lhs = v2_binomial(top, n) + n
        if lhs < bound:
            bad.append({"part": part, "n": n, "lhs": lhs, "bound": bound})
    return bad


def _poly_parts(lemma_id: str, r: int, t: int) -> list[tuple[str, SymPoly, SymPoly, int, bool]]:
    """Rows ``(part, lhs, rhs, modulus, informational)``."""
    d = delta(r)
    X_2Y = ((1, 0), (0, 2))
    X_2YmX = ((1, 0), (-1, 2))
    _2X_Y = ((2, 0), (0, 1))
    rows = []
    if lemma_id == "F":
        F = special_poly("F", r)
        mod = 2 ** (t + 2)
        rows.append(("a", subst(F, *X_2Y), _poly_from_terms(r, {1: -2}), mod, False))
        rows.append(("b", subst(F, *X_2YmX),
                     _poly_from_terms(r, {0: 2 * d, 1: 2 * (r - 1), 2: -2 * r * (r - 1)}), mod, False))
        rhs_c = {r: 1}
        if r in (2, 3):
            rhs_c[1] = rhs_c.get(1, 0) - 2 ** (r - 1)
        rows.append(("c", subst(F, *_2X_Y), _poly_from_terms(r, rhs_c), mod, False))
    elif lemma_id == "H":
        H = special_poly("H", r)
        mod = 2 ** (t + 2)
        odd = r % 2 == 1
        rows.append(("a", subst(H, *X_2Y),
                     _poly_from_terms(r, {1: 2 * r, 2: 2 * r * (r - 1)} if odd else {}), mod, False))
        rows.append(("b", subst(H, *X_2YmX),
                     _poly_from_terms(r, {1: -2 * r, 2: 2 * r * (r - 1)} if odd else {0: -2}), mod, False))
        rows.append(("c", subst(H, *_2X_Y),
                     _poly_from_terms(r, {r - 1: 2 * r, r - 2: 2 * r * (r - 1)} if odd else {}), mod, False))
    elif lemma_id == "Hprime":
        Hp = special_poly("Hprime", r)
        mod = 4
        rows.append(("a", subst(Hp, *X_2Y), _poly_from_terms(r, {}), mod, False))
        rows.append(("b", subst(Hp, *X_2YmX), _poly_from_terms(r, {0: -2 * d}), mod, False))
        if r == 2:
            rhs = {2: -2}
        elif r == 3:
            rhs = {}
        else:
            rhs = {r - 1: 2 * r}
        rows.append(("c", subst(Hp, *_2X_Y), _poly_from_terms(r, rhs), mod, False))
    elif lemma_id == "Heven":
        H = special_poly("H", r)
        mod = 2 ** (t + 2)
        if r % 2 == 0:
            ra = {1: 2 * r, 2: 2 * r}
            rb = {0: -2, 1: 2 * r, 2: -2 * r}
            rc = {r - 1: 2 * r, r - 2: 2 * r}
        else:
            ra = {1: 2 * r}
            rb = {1: -2 * r}
            rc = {r - 1: 2 * r}
        rows.append(("1", subst(H, *X_2Y), _poly_from_terms(r, ra), mod, False))
        rows.append(("2", subst(H, *X_2YmX), _poly_from_terms(r, rb), mod, False))
        rows.append(("3", subst(H, *_2X_Y), _poly_from_terms(r, rc), mod, False))
    elif lemma_id == "K":
        K = special_poly("K", r)
        even = r % 2 == 0
        mod = 2 ** (t + 1) if even else 4
        info = not even
        rows.append(("1", subst(K, *X_2Y), _poly_from_terms(r, {}), mod, info))
        rb = {0: -r, 1: -4} if even else {0: -2 * comb(r - 1, 2)}
        rows.append(("2", subst(K, *X_2YmX), _poly_from_terms(r, rb), mod, info))
        rows.append(("3", subst(K, *_2X_Y), _poly_from_terms(r, {}), mod, info))
    return rows


def verify_congruence(lemma_id: str, r: int) -> dict:
    """Check one lemma for one ``r`` by exact integer computation.

    Returns ``{lemma, r, t, status, mismatches, informational}``; ``status``
    is ``"pass"`` when no binding part fails.  Parts marked informational are
    reported but do not affect the status.
    """
    if lemma_id not in LEMMAS:
        raise ValueError(f"unknown lemma {lemma_id!r}")
    if r < _LEMMA_MIN_R[lemma_id]:
        raise OutOfRange(f"{lemma_id} is stated for r >= {_LEMMA_MIN_R[lemma_id]}")
    t = lemma_t(lemma_id, r)
    mismatches: list[dict] = []
    informational: list[dict] = []
    if lemma_id == "CMB1":
        mismatches = _binomial_check(r, r - 1, 1, r - 1, t + 1, "")
    elif lemma_id == "CMB2":
        mismatches = _binomial_check(r, r, 3, r, t + 2, "")
    elif lemma_id == "sl1cmb1":
        mismatches = _binomial_check(r, r, 3, r, t + 2, "")
    elif lemma_id == "sl1cmb2":
        mismatches = _binomial_check(r, r - 1, 2, r - 1, t + 1, "1")
        mismatches += _binomial_check(r, r - 2, 1, r - 2, t + 1, "2")
    else:
        for part, lhs, rhs, mod, info in _poly_parts(lemma_id, r, t):
            bad = _compare(part, lhs, rhs, mod)
            if info:
                for b in bad:
                    b["informational"] = True
                informational.append({"part": part, "holds": not bad})
            mismatches.extend(bad)
    binding = [m for m in mismatches if not m.get("informational")]
    return {
        "lemma": lemma_id,
        "r": r,
        "t": t,
        "status": "pass" if not binding else "fail",
        "mismatches": mismatches,
        "informational": informational,
    }


def sweep(lemma_id: str, r_max: int, r_min: int | None = None) -> list[dict]:
    lo = max(_LEMMA_MIN_R[lemma_id], r_min or 0)
    return [verify_congruence(lemma_id, r) for r in range(lo, r_max + 1)]
