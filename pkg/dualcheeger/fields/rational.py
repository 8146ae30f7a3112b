"""
Exact rational backend.

Elements are ``fractions.Fraction`` values, which keep the canonical form
gcd(|numerator|, denominator) = 1 with a positive denominator.
"""
import math
from fractions import Fraction
from numbers import Rational as _Rational

from dualcheeger.exceptions import DomainError, NotRepresentableError
from dualcheeger.fields.base import Backend, FieldElement, OrderedField, Ordering
from dualcheeger.fields.real import RealField

def rational_sqrt(value: Fraction) -> Fraction:
    """
    Exact square root of a nonnegative rational.

    Args:
        value: Rational to take the root of

    Returns:
        The nonnegative rational root

    Raises:
        DomainError: If value is negative
        NotRepresentableError: If numerator or denominator is not a perfect square
    """
    value = Fraction(value)
    if value < 0:
        raise DomainError(f"Square root of negative element {value}")
    num_root = math.isqrt(value.numerator)
    den_root = math.isqrt(value.denominator)
    if num_root * num_root != value.numerator or den_root * den_root != value.denominator:
        raise NotRepresentableError(
            f"sqrt({value}) is not rational",
            fallback=math.sqrt(value),
        )
    return Fraction(num_root, den_root)

class RationalField(OrderedField):
    """The field of rational numbers with exact arithmetic."""

    backend = Backend.RATIONAL
    exact = True

    def contains(self, value: FieldElement) -> bool:
        return isinstance(value, _Rational) and not isinstance(value, bool)

    def from_fraction(self, value: Fraction) -> Fraction:
        return Fraction(value)

    def compare(self, a: FieldElement, b: FieldElement) -> Ordering:
        self.check(a, b)
        if a < b:
            return Ordering.LESS
        if a > b:
            return Ordering.GREATER
        return Ordering.EQUAL

    def _divide(self, a: FieldElement, b: FieldElement) -> Fraction:
        return Fraction(a) / Fraction(b)

    def sqrt(self, a: FieldElement) -> Fraction:
        self.check(a)
        return rational_sqrt(a)

    def to_float(self, a: FieldElement) -> float:
        return float(a)

    def fallback(self) -> RealField:
        return RealField()

    def to_fallback(self, a: FieldElement) -> float:
        return float(a)
