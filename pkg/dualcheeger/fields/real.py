"""
Double-precision model of the real numbers.

Equality is tolerance based: a and b compare equal when
|a - b| <= tolerance * max(1, |a|, |b|).
"""
import math
from fractions import Fraction

from dualcheeger.config import FLOAT_TOLERANCE
from dualcheeger.exceptions import DomainError
from dualcheeger.fields.base import Backend, FieldElement, OrderedField, Ordering

class RealField(OrderedField):
    """Floats with a relative comparison tolerance."""

    backend = Backend.FLOAT
    exact = False

    def __init__(self, tolerance: float = FLOAT_TOLERANCE):
        self.tolerance = tolerance

    def contains(self, value: FieldElement) -> bool:
        return isinstance(value, (float, int)) and not isinstance(value, bool)

    def from_fraction(self, value: Fraction) -> float:
        return float(value)

    def compare(self, a: FieldElement, b: FieldElement) -> Ordering:
        self.check(a, b)
        if abs(a - b) <= self.tolerance * max(1.0, abs(a), abs(b)):
            return Ordering.EQUAL
        return Ordering.LESS if a < b else Ordering.GREATER

    def _divide(self, a: FieldElement, b: FieldElement) -> float:
        return a / b

    def sqrt(self, a: FieldElement) -> float:
        self.check(a)
        sign = self.sign(a)
        if sign is Ordering.EQUAL:
            return 0.0
        if sign is Ordering.LESS:
            raise DomainError(f"Square root of negative element {a}")
        return math.sqrt(a)

    def to_float(self, a: FieldElement) -> float:
        return float(a)

    def fallback(self) -> 'RealField':
        return self

    def to_fallback(self, a: FieldElement) -> float:
        return float(a)

    def __repr__(self) -> str:
        return f"RealField(tolerance={self.tolerance})"
