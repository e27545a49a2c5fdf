"""Arithmetic in the finite fields F_{2^m}, 1 <= m <= 8.

Elements are bit vectors: bit ``i`` is the coefficient of ``z^i`` where ``z``
is a root of the canonical defining polynomial of that degree.  The same
table fixes the unramified layer of :mod:`mod2red.field2adic`, so residues of
2-adic elements land directly in these fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import DivisionByZero, UnsupportedDegree

MAX_DEGREE = 8

# Bit masks including the leading term.  Degree 2 is x^2+x+1, the reduction
# of the minimal polynomial of a primitive cube root of unity.
CANONICAL_POLYS: dict[int, int] = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
}


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_mod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def is_irreducible(poly: int) -> bool:
    """Brute-force irreducibility test for small bit polynomials."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for cand in range(1 << d, 1 << (d + 1)):
            if poly_mod(poly, cand) == 0:
                return False
    return True


class FiniteField:
    """The field F_{2^m} with its canonical defining polynomial.

    Instances are interned per degree, so ``FiniteField(2) is FiniteField(2)``.
    """

    _cache: dict[int, "FiniteField"] = {}

    def __new__(cls, m: int):
        if m in cls._cache:
            return cls._cache[m]
        if not 1 <= m <= MAX_DEGREE:
            raise UnsupportedDegree(f"F_2^{m} is outside 1 <= m <= {MAX_DEGREE}")
        obj = super().__new__(cls)
        obj.degree = m
        obj.modulus = CANONICAL_POLYS[m]
        obj.order = 1 << m
        cls._cache[m] = obj
        return obj

    def __reduce__(self):
        return (FiniteField, (self.degree,))

    def __repr__(self) -> str:
        return f"FiniteField({self.degree})"

    def __call__(self, bits: int) -> "FFElement":
        if not 0 <= bits < self.order:
            raise ValueError(f"{bits} is not an element of F_{self.order}")
        return FFElement(self, bits)

    def zero(self) -> "FFElement":
        return FFElement(self, 0)

    def one(self) -> "FFElement":
        return FFElement(self, 1)

    def gen(self) -> "FFElement":
        return FFElement(self, 0b10 if self.degree > 1 else 1)

    def from_int(self, n: int) -> "FFElement":
        return FFElement(self, n & 1)

    def from_rational(self, q) -> "FFElement":
        if q.denominator % 2 == 0:
            raise ValueError(f"{q} is not 2-integral")
        return FFElement(self, q.numerator & 1)

    def elements(self):
        return [FFElement(self, b) for b in range(self.order)]

    def mul_bits(self, a: int, b: int) -> int:
        return poly_mod(clmul(a, b), self.modulus)


def _pow_bits(field: FiniteField, a: int, e: int) -> int:
    out = 1
    while e:
        if e & 1:
            out = field.mul_bits(out, a)
        a = field.mul_bits(a, a)
        e >>= 1
    return out


@lru_cache(maxsize=None)
def _embedding_image(m: int, n: int) -> int:
    """Image of the generator of F_{2^m} in F_{2^n}: its least root there."""
    if n % m:
        raise UnsupportedDegree(f"F_2^{m} does not embed in F_2^{n}")
    target = FiniteField(n)
    poly = CANONICAL_POLYS[m]
    for cand in range(target.order):
        acc = 0
        for i in range(poly.bit_length() - 1, -1, -1):
            acc = target.mul_bits(acc, cand) ^ ((poly >> i) & 1)
        if acc == 0:
            return cand
    raise AssertionError("canonical polynomial has no root in an extension")


def embed(a: "FFElement", target: FiniteField) -> "FFElement":
    """Map ``a`` into ``target`` along the canonical embedding."""
    src = a.field
    if src is target:
        return a
    g = _embedding_image(src.degree, target.degree)
    out, power = 0, 1
    for i in range(src.degree):
        if (a.bits >> i) & 1:
            out ^= power
        power = target.mul_bits(power, g)
    return FFElement(target, out)


def common_field(a: FiniteField, b: FiniteField) -> FiniteField:
    m = a.degree * b.degree // gcd(a.degree, b.degree)
    if m > MAX_DEGREE:
        raise UnsupportedDegree(f"compositum of degree {m} exceeds {MAX_DEGREE}")
    return FiniteField(m)


@dataclass(frozen=True)
class FFElement:
    field: FiniteField
    bits: int

    def _coerce(self, other):
        if isinstance(other, int):
            return self, FFElement(self.field, other & 1)
        if not isinstance(other, FFElement):
            return None
        if other.field is self.field:
            return self, other
        host = common_field(self.field, other.field)
        return embed(self, host), embed(other, host)

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return FFElement(a.field, a.bits ^ b.bits)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return FFElement(a.field, a.field.mul_bits(a.bits, b.bits))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FFElement(self.field, _pow_bits(self.field, self.bits, e))

    def inverse(self) -> "FFElement":
        if self.bits == 0:
            raise DivisionByZero("inverse of zero in a finite field")
        return FFElement(self.field, _pow_bits(self.field, self.bits, self.field.order - 2))

    def __truediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * a.inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.bits == (other & 1) and other in (0, 1)
        if not isinstance(other, FFElement):
            return NotImplemented
        if other.field is self.field:
            return self.bits == other.bits
        try:
            a, b = self._coerce(other)
        except UnsupportedDegree:
            return False
        return a.bits == b.bits

    def __hash__(self):
        return hash((self.field.degree, self.bits))

    def __bool__(self):
        return self.bits != 0

    def is_zero(self) -> bool:
        return self.bits == 0

    def frobenius(self) -> "FFElement":
        return self * self

    def min_subfield_degree(self) -> int:
        """Degree of the smallest subfield containing this element."""
        for d in range(1, self.field.degree + 1):
            if self.field.degree % d == 0 and (self ** (1 << d)) == self:
                return d
        return self.field.degree

    def descend(self) -> "FFElement":
        """Rewrite the element in the smallest subfield that contains it."""
        d = self.min_subfield_degree()
        if d == self.field.degree:
            return self
        small = FiniteField(d)
        for cand in small.elements():
            if embed(cand, self.field).bits == self.bits:
                return cand
        raise AssertionError("subfield element not found")

    def __str__(self) -> str:
        if self.bits == 0:
            return "0"
        terms = []
        for i in range(self.field.degree - 1, -1, -1):
            if (self.bits >> i) & 1:
                terms.append("1" if i == 0 else ("z" if i == 1 else f"z^{i}"))
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"FFElement(F{self.field.order}, {self})"


def solve_unit_quadratic(c: FFElement) -> tuple[FFElement, FFElement]:
    """Roots ``(lam, lam^-1)`` of ``x^2 + c x + 1``.

    The roots are looked for in the field of ``c`` first and otherwise in its
    quadratic extension, by exhaustive search.  The pair is ordered so that the
    first root has the smaller bit vector.
    """
    c = c.descend()
    if c.is_zero():
        one = c.field.one()
        return one, one
    for host_deg in (c.field.degree, 2 * c.field.degree):
        host = FiniteField(host_deg)
        cc = embed(c, host)
        roots = [x for x in host.elements() if (x * x + cc * x + 1).is_zero()]
        if roots:
            if len(roots) == 1:
                roots = roots * 2
            lam, mu = sorted(roots, key=lambda x: x.bits)
            return lam, mu
    raise AssertionError("x^2+cx+1 always splits over the quadratic extension")


def format_unit_quadratic(c: FFElement | int, var: str = "x") -> str:
    """Render ``x^2 + c x + 1`` with coefficients written in ``z``."""
    if isinstance(c, int):
        bits = c & 1
        c_str = "1" if bits else "0"
    else:
        c = c.descend()
        c_str = str(c)
    if c_str == "0":
        return f"{var}^2+1"
    if c_str == "1":
        return f"{var}^2+{var}+1"
    if "+" in c_str:
        return f"{var}^2+({c_str})*{var}+1"
    return f"{var}^2+{c_str}*{var}+1"
