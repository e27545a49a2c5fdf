"""Uniform access to the three coefficient rings used for polynomials:
the integers, a 2-adic extension tower, and a finite field F_{2^m}."""

from __future__ import annotations

from fractions import Fraction

from .field2adic import ExtElement, ExtensionTower
from .gf2m import FFElement, FiniteField


class IntegerRing:
    """The integers, used for exact congruence checks."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return int(n)

    def from_rational(self, q) -> int:
        q = Fraction(q)
        if q.denominator != 1:
            raise ValueError(f"{q} is not an integer")
        return q.numerator

    def __repr__(self) -> str:
        return "ZZ"


ZZ = IntegerRing()

Ring = IntegerRing | ExtensionTower | FiniteField


def ring_of(x) -> Ring:
    if isinstance(x, ExtElement):
        return x.tower
    if isinstance(x, FFElement):
        return x.field
    if isinstance(x, int):
        return ZZ
    raise TypeError(f"no coefficient ring for {type(x).__name__}")


def is_zero(x) -> bool:
    """Certified zero test (inexact 2-adic zeros are not certified)."""
    if isinstance(x, ExtElement):
        return x.is_certified_zero()
    if isinstance(x, FFElement):
        return x.bits == 0
    return x == 0


def looks_zero(x) -> bool:
    """Zero as far as the stored digits go."""
    if isinstance(x, ExtElement):
        return not any(x.coeffs)
    return is_zero(x)


def scale(ring: Ring, x, q):
    """Multiply a ring element by a rational scalar."""
    if isinstance(ring, ExtensionTower):
        return x.scale(q)
    if isinstance(ring, FiniteField):
        q = Fraction(q)
        return x if q.numerator % 2 else ring.zero()
    q = Fraction(q)
    if q.denominator != 1:
        raise ValueError("non-integral scalar over the integers")
    return x * q.numerator
