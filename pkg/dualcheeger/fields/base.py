"""
Ordered-field contract shared by every backend.

Values are plain Python objects (``Fraction``, ``float`` or
``LeviCivitaNumber``) that support ``+``, ``-``, ``*`` and unary ``-``.
Everything that depends on the backend (order, division, square roots,
membership, formatting) goes through an ``OrderedField`` instance.
"""
from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict

from dualcheeger.exceptions import BackendMismatchError, DivisionByZeroError, ValidationError

FieldElement = Any

class Ordering(Enum):
    """Outcome of comparing two field elements."""
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INDISTINGUISHABLE = "indistinguishable"

    @classmethod
    def from_string(cls, value: str) -> 'Ordering':
        """Convert string to Ordering."""
        for member in cls:
            if member.value == value:
                return member
        raise ValueError(f"Unknown ordering: {value}")

    @property
    def is_equalish(self) -> bool:
        """True for EQUAL and INDISTINGUISHABLE."""
        return self in (Ordering.EQUAL, Ordering.INDISTINGUISHABLE)

class Backend(Enum):
    """Field backend tags used in graph files and on the command line."""
    RATIONAL = "rational"
    FLOAT = "float"
    LC_RATIONAL = "lc-rational"
    LC_FLOAT = "lc-float"

    @classmethod
    def from_string(cls, value: str) -> 'Backend':
        """Convert string to Backend."""
        for member in cls:
            if member.value == value:
                return member
        raise ValidationError(f"Unknown field backend: {value}")

class OrderedField(ABC):
    """
    An ordered field backend.

    Subclasses provide membership, comparison, division and square
    roots; the remaining operations are derived here.
    """

    backend: Backend
    exact: bool = True

    @abstractmethod
    def contains(self, value: FieldElement) -> bool:
        """Whether a value belongs to this backend."""

    @abstractmethod
    def from_fraction(self, value: Fraction) -> FieldElement:
        """Embed a rational number."""

    @abstractmethod
    def compare(self, a: FieldElement, b: FieldElement) -> Ordering:
        """Compare two elements of this backend."""

    @abstractmethod
    def _divide(self, a: FieldElement, b: FieldElement) -> FieldElement:
        """Divide, b known to be nonzero."""

    @abstractmethod
    def sqrt(self, a: FieldElement) -> FieldElement:
        """Nonnegative square root."""

    @abstractmethod
    def to_float(self, a: FieldElement) -> float:
        """Float approximation (the standard part for Levi-Civita numbers)."""

    @abstractmethod
    def fallback(self) -> 'OrderedField':
        """The backend used when an exact result is not representable."""

    @abstractmethod
    def to_fallback(self, a: FieldElement) -> FieldElement:
        """Map an element into the fallback backend."""

    @property
    def name(self) -> str:
        return self.backend.value

    @property
    def zero(self) -> FieldElement:
        return self.from_fraction(Fraction(0))

    @property
    def one(self) -> FieldElement:
        return self.from_fraction(Fraction(1))

    def from_int(self, value: int) -> FieldElement:
        """Embed an integer."""
        return self.from_fraction(Fraction(value))

    def check(self, *values: FieldElement) -> None:
        """
        Ensure every value belongs to this backend.

        Raises:
            BackendMismatchError: If a value comes from another backend
        """
        for value in values:
            if not self.contains(value):
                raise BackendMismatchError(
                    f"{type(value).__name__} value {value!r} is not an element of the {self.name} field"
                )

    def arith(self, a: FieldElement, b: FieldElement, op: str) -> FieldElement:
        """
        Apply one of the four field operations.

        Args:
            a: Left operand
            b: Right operand
            op: One of '+', '-', '*', '/'

        Returns:
            The result in this backend

        Raises:
            BackendMismatchError: If an operand is from another backend
            DivisionByZeroError: If dividing by zero
            ValidationError: If op is unknown
        """
        self.check(a, b)
        operations: Dict[str, Callable[[FieldElement, FieldElement], FieldElement]] = {
            '+': lambda x, y: x + y,
            '-': lambda x, y: x - y,
            '*': lambda x, y: x * y,
            '/': self.div,
        }
        if op not in operations:
            raise ValidationError(f"Unknown field operation: {op}")
        return operations[op](a, b)

    def div(self, a: FieldElement, b: FieldElement) -> FieldElement:
        """Divide a by b, raising DivisionByZeroError for b = 0."""
        if self.is_zero(b):
            raise DivisionByZeroError(f"Division of {self.format(a)} by zero")
        return self._divide(a, b)

    def inverse(self, a: FieldElement) -> FieldElement:
        return self.div(self.one, a)

    def is_zero(self, a: FieldElement) -> bool:
        """True when a equals zero or cannot be told apart from it."""
        return self.compare(a, self.zero).is_equalish

    def sign(self, a: FieldElement) -> Ordering:
        """Compare a against zero."""
        return self.compare(a, self.zero)

    def absolute(self, a: FieldElement) -> FieldElement:
        """|a| = a if a >= 0, -a otherwise."""
        return -a if self.sign(a) is Ordering.LESS else a

    def max(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return b if self.compare(a, b) is Ordering.LESS else a

    def min(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return b if self.compare(a, b) is Ordering.GREATER else a

    def sum(self, values) -> FieldElement:
        total = self.zero
        for value in values:
            total = total + value
        return total

    def format(self, a: FieldElement) -> str:
        """Render an element in weight-expression syntax."""
        from dualcheeger.parsing.weight_parser import format_element
        return format_element(a)

    def parse(self, text: str) -> FieldElement:
        """Parse an element in weight-expression syntax."""
        from dualcheeger.parsing.weight_parser import parse_element
        return parse_element(text, self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"
