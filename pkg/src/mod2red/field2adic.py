"""Finite extensions of Q_2 presented as an unramified layer topped by an
Eisenstein layer, with exact valuations and explicit precision tracking.

An element is a vector of coordinates ``c[i*f + j]`` in the basis
``pi^i * w^j`` (``0 <= i < e``, ``0 <= j < f``), where ``w`` is a root of the
canonical unramified polynomial of degree ``f`` and ``pi`` a root of the
Eisenstein polynomial of degree ``e``.

Coordinates are rationals whose denominators are allowed to be odd or powers
of two.  An element is either *exact* (``prec is None``) or known modulo
``2^prec`` in every coordinate.  Exact elements come from rational input and
from ring operations on exact elements; they never lose information, so the
zero element built from exact input is certified zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    DivisionByZero,
    InsufficientPrecision,
    NegativeValuation,
    NotEisenstein,
    RingMismatch,
    UnsupportedDegree,
)
from .gf2m import CANONICAL_POLYS, FFElement, FiniteField

MAX_ABSOLUTE_DEGREE = 8
DEFAULT_PRECISION = 64
INFINITY = math.inf

Valuation = Union[Fraction, float]  # float only for +inf
Scalar = Union[int, Fraction]


def v2(x: Scalar) -> Valuation:
    """2-adic valuation of a rational number (``inf`` for zero)."""
    x = Fraction(x)
    if x == 0:
        return INFINITY
    num, den = x.numerator, x.denominator
    return Fraction(_v2_int(num) - _v2_int(den))


def _v2_int(n: int) -> int:
    n = abs(n)
    return (n & -n).bit_length() - 1


def truncate_rational(c: Fraction, n: int) -> Fraction:
    """Canonical representative of ``c`` modulo ``2^n`` (in ``[0, 2^n)``)."""
    if c == 0:
        return Fraction(0)
    den = c.denominator
    s = _v2_int(den)
    odd = den >> s
    m = n + s
    if m <= 0:
        return Fraction(0)
    mod = 1 << m
    rep = (c.numerator * pow(odd, -1, mod)) % mod
    return Fraction(rep, 1 << s)


def _unram_vec(x, f: int) -> tuple[Fraction, ...]:
    if isinstance(x, (int, Fraction)):
        return (Fraction(x),) + (Fraction(0),) * (f - 1)
    vec = tuple(Fraction(c) for c in x)
    if len(vec) > f:
        raise ValueError("unramified coefficient has too many coordinates")
    return vec + (Fraction(0),) * (f - len(vec))


@dataclass(frozen=True)
class ExtensionTower:
    """Q_2(w)(pi) with ``[E:Q_2] = e*f``.

    ``eisenstein`` lists the coefficients ``c_0 .. c_{e-1}`` of the monic
    polynomial ``x^e + c_{e-1} x^{e-1} + ... + c_0``; each coefficient is a
    length-``f`` vector over the unramified basis.
    """

    f: int
    e: int
    eisenstein: tuple[tuple[Fraction, ...], ...]
    working_precision: int = DEFAULT_PRECISION
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.f < 1 or self.e < 1:
            raise UnsupportedDegree("residue degree and ramification index must be >= 1")
        if self.e * self.f > MAX_ABSOLUTE_DEGREE:
            raise UnsupportedDegree(f"[E:Q_2] = {self.e * self.f} exceeds {MAX_ABSOLUTE_DEGREE}")
        if len(self.eisenstein) != self.e:
            raise NotEisenstein("Eisenstein polynomial has the wrong degree")
        for i, coeff in enumerate(self.eisenstein):
            val = min(v2(c) for c in coeff)
            if val < 1 or (i == 0 and val != 1):
                raise NotEisenstein(
                    f"coefficient of x^{i} has valuation {val}; need >= 1 and exactly 1 for x^0"
                )
        ur = CANONICAL_POLYS[self.f]
        object.__setattr__(self, "_unram", tuple((ur >> j) & 1 for j in range(self.f)))
        object.__setattr__(self, "_omega_powers", self._build_omega_powers())

    # construction helpers -------------------------------------------------

    @property
    def degree(self) -> int:
        return self.e * self.f

    @property
    def residue_field(self) -> FiniteField:
        return FiniteField(self.f)

    def _build_omega_powers(self):
        """``w^k`` for ``k < 2f-1`` as integer vectors of length ``f``."""
        f = self.f
        low = self._unram
        powers = []
        cur = [0] * f
        cur[0] = 1
        for _ in range(2 * f - 1):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [cur[j] - top * low[j] for j in range(f)]
        return tuple(powers)

    def with_precision(self, precision: int) -> "ExtensionTower":
        return ExtensionTower(self.f, self.e, self.eisenstein, precision, self.label)

    def element(self, coeffs: Sequence[Scalar], prec: int | None = None) -> "ExtElement":
        if len(coeffs) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(coeffs)}")
        vals = tuple(Fraction(c) for c in coeffs)
        if prec is not None:
            vals = tuple(truncate_rational(c, prec) for c in vals)
        return ExtElement(self, vals, prec)

    def from_rational(self, q: Scalar) -> "ExtElement":
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(q)
        return ExtElement(self, tuple(coeffs), None)

    from_int = from_rational

    def zero(self) -> "ExtElement":
        return self.from_rational(0)

    def one(self) -> "ExtElement":
        return self.from_rational(1)

    def pi(self) -> "ExtElement":
        if self.e == 1:
            # the Eisenstein root is -c_0, a rational multiple of 2 times a unit
            return self._unram_element(tuple(-c for c in self.eisenstein[0]))
        coeffs = [0] * self.degree
        coeffs[self.f] = 1
        return self.element(coeffs)

    def omega(self) -> "ExtElement":
        coeffs = [0] * self.degree
        if self.f == 1:
            raise ValueError("tower has no unramified generator")
        coeffs[1] = 1
        return self.element(coeffs)

    def _unram_element(self, vec: Sequence[Scalar]) -> "ExtElement":
        coeffs = list(vec) + [0] * (self.degree - self.f)
        return self.element(coeffs)

    def __repr__(self) -> str:
        name = self.label or f"f={self.f}, e={self.e}"
        return f"ExtensionTower({name})"

    # low-level arithmetic on coordinate vectors --------------------------

    def _umul(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
        f = self.f
        if f == 1:
            return [a[0] * b[0]]
        prod = [Fraction(0)] * (2 * f - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = [Fraction(0)] * f
        for k, c in enumerate(prod):
            if c:
                for j, w in enumerate(self._omega_powers[k]):
                    if w:
                        out[j] += c * w
        return out

    def _mul_coords(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
        e, f = self.e, self.f
        acc = [[Fraction(0)] * f for _ in range(2 * e - 1)]
        for i in range(e):
            ai = a[i * f:(i + 1) * f]
            if not any(ai):
                continue
            for j in range(e):
                bj = b[j * f:(j + 1) * f]
                if not any(bj):
                    continue
                p = self._umul(ai, bj)
                row = acc[i + j]
                for k in range(f):
                    row[k] += p[k]
        for k in range(2 * e - 2, e - 1, -1):
            top = acc[k]
            if not any(top):
                continue
            for i, c in enumerate(self.eisenstein):
                p = self._umul(top, c)
                row = acc[k - e + i]
                for m in range(f):
                    row[m] -= p[m]
        out = []
        for i in range(e):
            out.extend(acc[i])
        return tuple(out)

    def _exact_inverse(self, b: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Solve ``b * x = 1`` over Q by Gaussian elimination."""
        d = self.degree
        cols = []
        for k in range(d):
            basis = [Fraction(0)] * d
            basis[k] = Fraction(1)
            cols.append(self._mul_coords(b, basis))
        mat = [[cols[k][row] for k in range(d)] + [Fraction(1 if row == 0 else 0)] for row in range(d)]
        for col in range(d):
            piv = next((r for r in range(col, d) if mat[r][col] != 0), None)
            if piv is None:
                raise DivisionByZero("element is not invertible")
            mat[col], mat[piv] = mat[piv], mat[col]
            inv = 1 / mat[col][col]
            mat[col] = [x * inv for x in mat[col]]
            for r in range(d):
                if r != col and mat[r][col] != 0:
                    factor = mat[r][col]
                    mat[r] = [x - factor * y for x, y in zip(mat[r], mat[col])]
        return tuple(mat[r][d] for r in range(d))


_TOWER_CACHE: dict[tuple, ExtensionTower] = {}


def build_tower(
    f: int,
    e: int,
    eisenstein_spec: Iterable | None = None,
    precision: int = DEFAULT_PRECISION,
    label: str = "",
) -> ExtensionTower:
    """Build the tower ``Q_2(w)(pi)``.

    ``eisenstein_spec`` lists the polynomial coefficients from the constant
    term up to the leading one; entries are rationals or length-``f`` vectors
    over the unramified basis.  The leading coefficient must be an exact odd
    rational and is divided out.  When omitted, ``x^e - 2`` is used.
    """
    if e * f > MAX_ABSOLUTE_DEGREE:
        raise UnsupportedDegree(f"[E:Q_2] = {e * f} exceeds {MAX_ABSOLUTE_DEGREE}")
    if eisenstein_spec is None:
        eisenstein_spec = [-2] + [0] * (e - 1) + [1]
    spec = [_unram_vec(c, f) for c in eisenstein_spec]
    if len(spec) != e + 1:
        raise NotEisenstein(f"expected {e + 1} coefficients for a degree-{e} polynomial")
    lead = spec[-1]
    if any(lead[1:]) or lead[0] == 0 or v2(lead[0]) != 0:
        raise NotEisenstein("leading coefficient must be a rational unit")
    lc = lead[0]
    coeffs = tuple(tuple(c / lc for c in vec) for vec in spec[:-1])
    return ExtensionTower(f, e, coeffs, precision, label)


def lower_valuation_of_coords(tower: ExtensionTower, coeffs: Sequence[Fraction]) -> Valuation:
    best: Valuation = INFINITY
    f, e = tower.f, tower.e
    for idx, c in enumerate(coeffs):
        if c:
            cand = v2(c) + Fraction(idx // f, e)
            if cand < best:
                best = cand
    return best


@dataclass(frozen=True)
class ExtElement:
    tower: ExtensionTower
    coeffs: tuple[Fraction, ...]
    prec: int | None = None

    # basic predicates ----------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.prec is None

    def is_certified_zero(self) -> bool:
        return self.prec is None and not any(self.coeffs)

    def _known_min(self) -> Valuation:
        return lower_valuation_of_coords(self.tower, self.coeffs)

    def lower_valuation(self) -> Valuation:
        """A certified lower bound for the valuation."""
        m = self._known_min()
        if self.prec is not None:
            m = min(m, Fraction(self.prec))
        return m

    def valuation(self) -> Valuation:
        """Exact valuation in ``(1/e)Z``, or ``inf`` for certified zero."""
        m = self._known_min()
        if self.prec is None:
            return m
        if m < self.prec:
            return m
        raise InsufficientPrecision(
            f"all coordinates vanish modulo 2^{self.prec}; valuation not certified"
        )

    def residue(self) -> FFElement:
        """Image in the residue field F_{2^f}."""
        field_ = self.tower.residue_field
        m = self._known_min()
        if m < 0 and (self.prec is None or m < self.prec):
            raise NegativeValuation(f"residue of an element of valuation {m}")
        if self.prec is not None and self.prec < 1:
            raise InsufficientPrecision("precision below one digit; residue undetermined")
        bits = 0
        for j in range(self.tower.f):
            c = self.coeffs[j]
            if c and c.numerator % 2 and c.denominator % 2:
                bits |= 1 << j
        return FFElement(field_, bits)

    # arithmetic ------------------------------------------------------------

    def _lift(self, other) -> "ExtElement":
        if isinstance(other, ExtElement):
            if other.tower != self.tower:
                raise RingMismatch(f"{other.tower!r} vs {self.tower!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.tower.from_rational(other)
        raise TypeError(f"cannot combine ExtElement with {type(other).__name__}")

    def _make(self, coeffs, prec) -> "ExtElement":
        if prec is not None:
            coeffs = tuple(truncate_rational(c, prec) for c in coeffs)
        return ExtElement(self.tower, tuple(coeffs), prec)

    @staticmethod
    def _min_prec(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def __add__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        prec = self._min_prec(self.prec, o.prec)
        return self._make(tuple(x + y for x, y in zip(self.coeffs, o.coeffs)), prec)

    __radd__ = __add__

    def __neg__(self):
        return self._make(tuple(-x for x in self.coeffs), self.prec)

    def __sub__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, q: Scalar) -> "ExtElement":
        """Multiply by a rational scalar; precision shifts by ``v2(q)``."""
        q = Fraction(q)
        if q == 0:
            return self.tower.zero()
        prec = None if self.prec is None else self.prec + int(v2(q))
        return self._make(tuple(c * q for c in self.coeffs), prec)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        if self.is_certified_zero() or o.is_certified_zero():
            return self.tower.zero()
        coeffs = self.tower._mul_coords(self.coeffs, o.coeffs)
        prec = None
        if self.prec is not None or o.prec is not None:
            bound = INFINITY
            if self.prec is not None:
                bound = min(bound, self.prec + o.lower_valuation())
            if o.prec is not None:
                bound = min(bound, o.prec + self.lower_valuation())
            prec = math.floor(bound)
        return self._make(coeffs, prec)

    __rmul__ = __mul__

    def inverse(self) -> "ExtElement":
        if self.is_certified_zero():
            raise DivisionByZero("division by a certified zero")
        if self.prec is None:
            return ExtElement(self.tower, self.tower._exact_inverse(self.coeffs), None)
        w = self.valuation()
        out_prec = math.floor(self.prec - 2 * w)
        if out_prec + w <= 0:
            raise InsufficientPrecision("inverse would retain no significant digits")
        inv = self.tower._exact_inverse(self.coeffs)
        return self._make(inv, out_prec)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self.scale(1 / Fraction(other))
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.tower.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # comparison --------------------------------------------------------------

    def equals(self, other) -> bool:
        """Certified equality: exact match, or congruence at the joint precision."""
        o = self._lift(other)
        diff = self - o
        if diff.prec is None:
            return not any(diff.coeffs)
        return not any(diff.coeffs)

    def to_rational(self) -> Fraction:
        """The value when it lies in Q (all non-constant coordinates zero)."""
        if any(self.coeffs[1:]):
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def __str__(self) -> str:
        return format_element(self)


def format_element(a: ExtElement, pi_name: str = "pi", w_name: str = "w") -> str:
    terms = []
    f, e = a.tower.f, a.tower.e
    for idx, c in enumerate(a.coeffs):
        if not c:
            continue
        i, j = divmod(idx, f)
        basis = []
        if i:
            basis.append(pi_name if i == 1 else f"{pi_name}^{i}")
        if j:
            basis.append(w_name if j == 1 else f"{w_name}^{j}")
        if not basis:
            terms.append(str(c))
        elif c == 1:
            terms.append("*".join(basis))
        elif c == -1:
            terms.append("-" + "*".join(basis))
        else:
            terms.append(f"{c}*" + "*".join(basis))
    body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
    if a.prec is not None:
        body += f" + O(2^{a.prec})"
    return body


def embed_rational(tower: ExtensionTower, q: Scalar) -> ExtElement:
    return tower.from_rational(q)


def valuation(a: ExtElement) -> Valuation:
    return a.valuation()


def residue(a: ExtElement) -> FFElement:
    return a.residue()


def arith(a: ExtElement, b: ExtElement, op: str) -> ExtElement:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def sqrt_2adic_integer(d: int, precision: int) -> int:
    """Square root of ``d = 1 mod 8`` in Z_2, correct modulo ``2^precision``.

    The root congruent to 1 mod 4 is returned.
    """
    if d % 8 != 1:
        raise ValueError("d must be 1 mod 8")
    x = 1
    for k in range(3, precision + 2):
        # x^2 = d mod 2^k; lift to 2^(k+1)
        if (x * x - d) % (1 << (k + 1)):
            x += 1 << (k - 1)
    mod = 1 << precision
    x %= mod
    if x % 4 != 1:
        x = (-x) % mod
    return x
