"""Exception types raised across the package."""

from __future__ import annotations


class ReductionError(Exception):
    """Base class for all errors raised by this package."""


class NotEisenstein(ReductionError):
    pass


class UnsupportedDegree(ReductionError):
    pass


class DivisionByZero(ReductionError, ZeroDivisionError):
    pass


class InsufficientPrecision(ReductionError):
    pass


class NegativeValuation(ReductionError):
    pass


class RingMismatch(ReductionError):
    pass


class DegreeTooSmall(ReductionError):
    pass


class NotInSubmodule(ReductionError):
    def __init__(self, message: str, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class NotDivisible(ReductionError):
    pass


class OutOfRange(ReductionError):
    pass


class NonIntegral(ReductionError):
    def __init__(self, message: str, vertex=None, monomial=None):
        super().__init__(message)
        self.vertex = vertex
        self.monomial = monomial


class SlopeOutOfRange(ReductionError):
    pass


class WeightTooSmall(ReductionError):
    pass


class UnsupportedRegime(ReductionError):
    pass


class MismatchAtVertex(ReductionError):
    def __init__(self, message: str, vertices=()):
        super().__init__(message)
        self.vertices = list(vertices)


class ParseError(ReductionError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnsupportedCompositum(ReductionError):
    pass


class NonSquareFree(ReductionError):
    pass
