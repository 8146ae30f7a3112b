"""
Truncated Levi-Civita field.

A ``LeviCivitaNumber`` is a finite series sum(a_i * e^q_i) with strictly
increasing rational exponents, together with a truncation order T: every
term with exponent below T is known exactly, nothing is known about
exponents >= T.  T is infinite for numbers that are exact finite series.

Coefficients are either all ``Fraction`` (exact mode) or all ``float``.
Mixing the two modes raises ``BackendMismatchError``.

Inverses and square roots are infinite series; they are summed up to a
relative truncation budget taken from the enclosing ``truncation_budget``
context or passed explicitly.
"""
import math
from contextlib import contextmanager
from contextvars import ContextVar
from fractions import Fraction
from numbers import Rational as _Rational
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

from dualcheeger.config import DEFAULT_TRUNCATION_ORDER, FLOAT_COEFFICIENT_EPSILON
from dualcheeger.exceptions import (
    BackendMismatchError,
    DivisionByZeroError,
    DomainError,
    InfiniteElementError,
    NotRepresentableError,
    ValidationError,
)
from dualcheeger.fields.base import Backend, FieldElement, OrderedField, Ordering
from dualcheeger.fields.rational import rational_sqrt

INFINITY = math.inf

Coefficient = Union[Fraction, float]
Truncation = Union[Fraction, float]
Term = Tuple[Fraction, Coefficient]

_budget: ContextVar[Fraction] = ContextVar('lc_truncation_budget', default=DEFAULT_TRUNCATION_ORDER)

@contextmanager
def truncation_budget(order) -> Iterator[Fraction]:
    """
    Set the relative truncation budget for inverses and square roots.

    Args:
        order: Positive rational budget

    Yields:
        The active budget
    """
    order = Fraction(order)
    if order <= 0:
        raise ValidationError(f"Truncation budget must be positive, got {order}")
    token = _budget.set(order)
    try:
        yield order
    finally:
        _budget.reset(token)

def current_budget() -> Fraction:
    """The active relative truncation budget."""
    return _budget.get()

def _as_truncation(value) -> Truncation:
    if value is None or value == INFINITY:
        return INFINITY
    return Fraction(value)

def _coefficient(value, exact: bool) -> Coefficient:
    if exact:
        if isinstance(value, float):
            raise BackendMismatchError(f"Float coefficient {value} in an exact Levi-Civita number")
        return Fraction(value)
    return float(value)

def _negligible(value: Coefficient, exact: bool) -> bool:
    if exact:
        return value == 0
    return abs(value) <= FLOAT_COEFFICIENT_EPSILON

def _merge(left: Tuple[Term, ...], right: Tuple[Term, ...], truncation: Truncation,
           exact: bool) -> Tuple[Term, ...]:
    """Sum of two canonical term tuples, cut at the truncation order."""
    merged = []
    i = j = 0
    while i < len(left) and j < len(right):
        q1, c1 = left[i]
        q2, c2 = right[j]
        if q1 < q2:
            term = left[i]
            i += 1
        elif q2 < q1:
            term = right[j]
            j += 1
        else:
            i += 1
            j += 1
            if q1 >= truncation:
                return tuple(merged)
            c = 0 + c1 + c2
            if _negligible(c, exact):
                continue
            term = (q1, c)
        if term[0] >= truncation:
            return tuple(merged)
        merged.append(term)
    for term in left[i:] + right[j:]:
        if term[0] >= truncation:
            break
        merged.append(term)
    return tuple(merged)

class LeviCivitaNumber:
    """
    Element of the truncated Levi-Civita field.

    Instances are immutable; every operation returns a new number in
    canonical form (merged exponents, no zero coefficients, no exponent
    at or above the truncation order).
    """

    __slots__ = ('terms', 'truncation', 'exact')

    def __init__(self, terms: Iterable[Tuple[object, object]] = (),
                 truncation=INFINITY, exact: bool = True):
        """
        Build a number from (exponent, coefficient) pairs.

        Args:
            terms: Pairs in any order; repeated exponents are summed
            truncation: Exponent from which the series is unknown
            exact: Fraction coefficients if True, float otherwise
        """
        truncation = _as_truncation(truncation)
        merged = {}
        for exponent, coefficient in terms:
            exponent = Fraction(exponent)
            if exponent >= truncation:
                continue
            coefficient = _coefficient(coefficient, exact)
            merged[exponent] = merged.get(exponent, 0) + coefficient
        canonical = tuple(
            (q, c) for q, c in sorted(merged.items(), key=lambda item: item[0])
            if not _negligible(c, exact)
        )
        object.__setattr__(self, 'terms', canonical)
        object.__setattr__(self, 'truncation', truncation)
        object.__setattr__(self, 'exact', exact)

    def __setattr__(self, name, value):
        raise AttributeError("LeviCivitaNumber is immutable")

    def __reduce__(self):
        return (LeviCivitaNumber, (self.terms, self.truncation, self.exact))

    @classmethod
    def _canonical(cls, terms: Tuple[Term, ...], truncation: Truncation, exact: bool) -> 'LeviCivitaNumber':
        """Wrap terms that are already sorted, merged, nonzero and below the truncation order."""
        number = object.__new__(cls)
        object.__setattr__(number, 'terms', terms)
        object.__setattr__(number, 'truncation', truncation)
        object.__setattr__(number, 'exact', exact)
        return number

    # Constructors

    @classmethod
    def constant(cls, value, exact: Optional[bool] = None) -> 'LeviCivitaNumber':
        """Embed a rational or float constant."""
        if exact is None:
            exact = not isinstance(value, float)
        return cls(((0, value),), exact=exact)

    @classmethod
    def monomial(cls, exponent, coefficient=1, exact: bool = True) -> 'LeviCivitaNumber':
        """coefficient * e^exponent."""
        return cls(((exponent, coefficient),), exact=exact)

    @classmethod
    def zero(cls, exact: bool = True) -> 'LeviCivitaNumber':
        return cls((), exact=exact)

    @classmethod
    def one(cls, exact: bool = True) -> 'LeviCivitaNumber':
        return cls.constant(1, exact=exact)

    # Inspection

    @property
    def is_exact_zero(self) -> bool:
        return not self.terms and self.truncation == INFINITY

    @property
    def leading_exponent(self) -> Truncation:
        """Smallest exponent present; the truncation order when there are no terms."""
        return self.terms[0][0] if self.terms else self.truncation

    @property
    def leading_coefficient(self) -> Coefficient:
        return self.terms[0][1] if self.terms else _coefficient(0, self.exact)

    def coefficient(self, exponent) -> Coefficient:
        """Coefficient of e^exponent (zero if absent)."""
        exponent = Fraction(exponent)
        for q, c in self.terms:
            if q == exponent:
                return c
        return _coefficient(0, self.exact)

    def standard_part(self) -> Coefficient:
        """
        The e^0 coefficient.

        Raises:
            InfiniteElementError: If a negative exponent is present
            NotRepresentableError: If the e^0 coefficient lies beyond the truncation order
        """
        if self.terms and self.terms[0][0] < 0:
            raise InfiniteElementError(f"{self} is infinite and has no standard part")
        if self.truncation <= 0:
            raise NotRepresentableError(f"Standard part of {self} lies beyond its truncation order")
        return self.coefficient(0)

    def truncate(self, order) -> 'LeviCivitaNumber':
        """Forget every term at or above the given order."""
        return LeviCivitaNumber(self.terms, min(self.truncation, _as_truncation(order)), self.exact)

    def scaled(self, factor) -> 'LeviCivitaNumber':
        """Multiply every coefficient by a rational or float constant."""
        factor = _coefficient(factor, self.exact)
        return LeviCivitaNumber(((q, c * factor) for q, c in self.terms), self.truncation, self.exact)

    def shifted(self, offset) -> 'LeviCivitaNumber':
        """Multiply by e^offset."""
        offset = Fraction(offset)
        return LeviCivitaNumber(((q + offset, c) for q, c in self.terms),
                                self.truncation + offset, self.exact)

    def to_float_coefficients(self) -> 'LeviCivitaNumber':
        """The same series with float coefficients."""
        return LeviCivitaNumber(((q, float(c)) for q, c in self.terms), self.truncation, exact=False)

    # Arithmetic

    def _coerce(self, other) -> 'LeviCivitaNumber':
        if isinstance(other, LeviCivitaNumber):
            if other.exact != self.exact:
                raise BackendMismatchError("Cannot mix exact and float Levi-Civita coefficients")
            return other
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, _Rational):
            return LeviCivitaNumber.constant(Fraction(other), exact=self.exact)
        if isinstance(other, float):
            if self.exact:
                raise BackendMismatchError(f"Cannot combine float {other} with an exact Levi-Civita number")
            return LeviCivitaNumber.constant(other, exact=False)
        return NotImplemented

    def __neg__(self) -> 'LeviCivitaNumber':
        return LeviCivitaNumber._canonical(tuple((q, -c) for q, c in self.terms), self.truncation, self.exact)

    def __pos__(self) -> 'LeviCivitaNumber':
        return self

    def __add__(self, other) -> 'LeviCivitaNumber':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        truncation = min(self.truncation, other.truncation)
        return LeviCivitaNumber._canonical(_merge(self.terms, other.terms, truncation, self.exact),
                                           truncation, self.exact)

    __radd__ = __add__

    def __sub__(self, other) -> 'LeviCivitaNumber':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'LeviCivitaNumber':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> 'LeviCivitaNumber':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        truncation = min(self.truncation + other.leading_exponent,
                         other.truncation + self.leading_exponent)
        products = {}
        for q1, c1 in self.terms:
            for q2, c2 in other.terms:
                q = q1 + q2
                if q >= truncation:
                    break
                products[q] = products.get(q, 0) + c1 * c2
        terms = tuple((q, c) for q, c in sorted(products.items()) if not _negligible(c, self.exact))
        return LeviCivitaNumber._canonical(terms, truncation, self.exact)

    __rmul__ = __mul__

    def __truediv__(self, other) -> 'LeviCivitaNumber':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> 'LeviCivitaNumber':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int) -> 'LeviCivitaNumber':
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = LeviCivitaNumber.one(self.exact)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def _unit_factor(self) -> Tuple[Fraction, Coefficient, 'LeviCivitaNumber']:
        """Split self = c * e^q * (1 + u) with u infinitesimal."""
        q0, c0 = self.terms[0]
        u = LeviCivitaNumber(((q - q0, c / c0) for q, c in self.terms[1:]),
                             self.truncation - q0, self.exact)
        return q0, c0, u

    def inverse(self, budget=None) -> 'LeviCivitaNumber':
        """
        Multiplicative inverse.

        Args:
            budget: Relative truncation budget (default: active context budget)

        Returns:
            1/self, truncated at -q + min(budget, T - q) where q is the leading exponent

        Raises:
            DivisionByZeroError: If self has no terms
        """
        if not self.terms:
            raise DivisionByZeroError(f"Inverse of {self}")
        q0, c0, u = self._unit_factor()
        if not u.terms and u.truncation == INFINITY:
            return LeviCivitaNumber(((-q0, _coefficient(1, self.exact) / c0),), exact=self.exact)
        budget = current_budget() if budget is None else Fraction(budget)
        relative = min(budget, u.truncation)
        step = -u
        series = LeviCivitaNumber.one(self.exact).truncate(relative)
        power = series
        while True:
            power = (power * step).truncate(relative)
            series = series + power
            if not power.terms:
                break
        return series.scaled(_coefficient(1, self.exact) / c0).shifted(-q0)

    def sqrt(self, budget=None) -> 'LeviCivitaNumber':
        """
        Nonnegative square root.

        Args:
            budget: Relative truncation budget (default: active context budget)

        Raises:
            DomainError: If self is negative
            NotRepresentableError: If the leading coefficient has no rational root;
                the float-coefficient root is attached as ``fallback``
        """
        if not self.terms:
            if self.truncation == INFINITY:
                return self
            return LeviCivitaNumber((), self.truncation / 2, self.exact)
        q0, c0, u = self._unit_factor()
        if c0 < 0:
            raise DomainError(f"Square root of negative element {self}")
        if self.exact:
            try:
                root = rational_sqrt(c0)
            except NotRepresentableError as e:
                raise NotRepresentableError(
                    f"Leading coefficient {c0} of {self} has no rational square root",
                    fallback=self.to_float_coefficients().sqrt(budget),
                ) from e
        else:
            root = math.sqrt(c0)
        if not u.terms and u.truncation == INFINITY:
            return LeviCivitaNumber(((q0 / 2, root),), exact=self.exact)
        budget = current_budget() if budget is None else Fraction(budget)
        relative = min(budget, u.truncation)
        series = LeviCivitaNumber.one(self.exact).truncate(relative)
        power = series
        binomial = Fraction(1)
        k = 0
        while True:
            k += 1
            binomial = binomial * (Fraction(1, 2) - (k - 1)) / k
            power = (power * u).truncate(relative)
            series = series + power * binomial
            if not power.terms:
                break
        return series.scaled(root).shifted(q0 / 2)

    # Order

    def compare(self, other) -> Ordering:
        """
        Compare with another number of the same coefficient mode.

        Returns:
            The sign of the leading coefficient of self - other; EQUAL only when
            the difference is an exact zero, INDISTINGUISHABLE when it has no
            terms below a finite truncation order
        """
        coerced = self._coerce(other)
        if coerced is NotImplemented:
            raise BackendMismatchError(f"Cannot compare with {other!r}")
        difference = self - coerced
        if difference.terms:
            return Ordering.GREATER if difference.terms[0][1] > 0 else Ordering.LESS
        if difference.truncation == INFINITY:
            return Ordering.EQUAL
        return Ordering.INDISTINGUISHABLE

    def __eq__(self, other) -> bool:
        if isinstance(other, (_Rational, float)) and not isinstance(other, bool):
            try:
                other = self._coerce(other)
            except BackendMismatchError:
                return False
        if not isinstance(other, LeviCivitaNumber):
            return NotImplemented
        return (self.terms == other.terms and self.truncation == other.truncation
                and self.exact == other.exact)

    def __hash__(self) -> int:
        return hash((self.terms, self.truncation, self.exact))

    def __str__(self) -> str:
        from dualcheeger.parsing.weight_parser import format_element
        return format_element(self)

    def __repr__(self) -> str:
        return f"LeviCivitaNumber('{self}', exact={self.exact})"

def epsilon(exponent=1, exact: bool = True) -> LeviCivitaNumber:
    """The monomial e^exponent."""
    return LeviCivitaNumber.monomial(exponent, 1, exact)

def within_order(a: LeviCivitaNumber, b: LeviCivitaNumber, m) -> bool:
    """
    Whether |a - b| < e^m holds for certain.

    A difference with no terms counts only if its truncation order exceeds m.
    """
    m = Fraction(m)
    difference = a - b
    if not difference.terms:
        return difference.truncation > m
    q, c = difference.terms[0]
    return q > m or (q == m and abs(c) < 1)

def leading_ratio_order(a: LeviCivitaNumber, b: LeviCivitaNumber,
                        c: LeviCivitaNumber, d: LeviCivitaNumber) -> Optional[Ordering]:
    """
    Order of a/b against c/d for positive a, b, c, d, read off the leading terms.

    Agrees with comparing a*d against c*b whenever it decides.  Returns None
    when the leading terms tie, or when some argument has no positive
    leading term, so that the caller falls back to the full products.
    """
    if not (a.terms and b.terms and c.terms and d.terms):
        return None
    (qa, ca), (qb, cb), (qc, cc), (qd, cd) = a.terms[0], b.terms[0], c.terms[0], d.terms[0]
    if ca <= 0 or cb <= 0 or cc <= 0 or cd <= 0:
        return None
    if _negligible(ca * cd, a.exact) or _negligible(cc * cb, a.exact):
        return None
    left, right = qa + qd, qc + qb
    if left != right:
        return Ordering.GREATER if left < right else Ordering.LESS
    difference = ca * cd - cc * cb
    if _negligible(difference, a.exact):
        return None
    return Ordering.GREATER if difference > 0 else Ordering.LESS

def converges(sequence: Sequence[LeviCivitaNumber], limit: LeviCivitaNumber, m) -> Optional[int]:
    """
    Order-topology convergence check on a finite sequence.

    Args:
        sequence: r_0, r_1, ...
        limit: Candidate limit r
        m: Required order; |r_n - r| < e^m must hold from some index on

    Returns:
        The smallest N0 with |r_n - r| < e^m for every n >= N0, or None if
        the last element already fails
    """
    first = None
    for index in range(len(sequence) - 1, -1, -1):
        if not within_order(sequence[index], limit, m):
            break
        first = index
    return first

class LeviCivitaField(OrderedField):
    """Truncated Levi-Civita field with exact rational or float coefficients."""

    def __init__(self, exact: bool = True, budget=None):
        """
        Args:
            exact: Fraction coefficients if True, float coefficients otherwise
            budget: Relative truncation budget for inverses and square roots
        """
        self.exact = exact
        self.budget = Fraction(budget) if budget is not None else DEFAULT_TRUNCATION_ORDER
        if self.budget <= 0:
            raise ValidationError(f"Truncation budget must be positive, got {self.budget}")

    @property
    def backend(self) -> Backend:
        return Backend.LC_RATIONAL if self.exact else Backend.LC_FLOAT

    def with_budget(self, budget) -> 'LeviCivitaField':
        return LeviCivitaField(self.exact, budget)

    def contains(self, value: FieldElement) -> bool:
        return isinstance(value, LeviCivitaNumber) and value.exact == self.exact

    def from_fraction(self, value) -> LeviCivitaNumber:
        return LeviCivitaNumber.constant(value, exact=self.exact)

    def compare(self, a: FieldElement, b: FieldElement) -> Ordering:
        self.check(a, b)
        return a.compare(b)

    def _divide(self, a: FieldElement, b: FieldElement) -> LeviCivitaNumber:
        return a * b.inverse(self.budget)

    def sqrt(self, a: FieldElement) -> LeviCivitaNumber:
        self.check(a)
        return a.sqrt(self.budget)

    def to_float(self, a: FieldElement) -> float:
        return float(a.standard_part())

    def fallback(self) -> 'LeviCivitaField':
        return LeviCivitaField(exact=False, budget=self.budget)

    def to_fallback(self, a: FieldElement) -> LeviCivitaNumber:
        return a.to_float_coefficients()

    def __repr__(self) -> str:
        return f"LeviCivitaField(exact={self.exact}, budget={self.budget})"
