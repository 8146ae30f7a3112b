"""
Univariate polynomials over an ordered field.

Coefficients are stored lowest degree first.  A coefficient counts as
zero when the field cannot tell it apart from zero, so remainders that
vanish up to the truncation order of Levi-Civita coefficients are
treated as exact zeros.
"""
from fractions import Fraction
from typing import List, Sequence, Tuple

from dualcheeger.exceptions import DivisionByZeroError
from dualcheeger.fields import LeviCivitaNumber, OrderedField
from dualcheeger.fields.base import FieldElement
from dualcheeger.utils.logger import logger

class Polynomial:
    """Polynomial with coefficients in a field."""

    __slots__ = ('coefficients', 'field')

    def __init__(self, coefficients: Sequence[FieldElement], field: OrderedField):
        coefficients = list(coefficients)
        while coefficients and field.is_zero(coefficients[-1]):
            coefficients.pop()
        self.coefficients: Tuple[FieldElement, ...] = tuple(coefficients)
        self.field = field

    @classmethod
    def constant(cls, value: FieldElement, field: OrderedField) -> 'Polynomial':
        return cls([value], field)

    @classmethod
    def from_roots(cls, roots: Sequence[FieldElement], field: OrderedField) -> 'Polynomial':
        """Monic polynomial prod (x - r)."""
        result = cls([field.one], field)
        for root in roots:
            result = result * cls([-root, field.one], field)
        return result

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> FieldElement:
        return self.coefficients[-1] if self.coefficients else self.field.zero

    def is_zero(self) -> bool:
        return not self.coefficients

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, k: int) -> FieldElement:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else self.field.zero

    def __add__(self, other: 'Polynomial') -> 'Polynomial':
        n = max(len(self), len(other))
        return Polynomial([self[k] + other[k] for k in range(n)], self.field)

    def __sub__(self, other: 'Polynomial') -> 'Polynomial':
        n = max(len(self), len(other))
        return Polynomial([self[k] - other[k] for k in range(n)], self.field)

    def __neg__(self) -> 'Polynomial':
        return Polynomial([-c for c in self.coefficients], self.field)

    def __mul__(self, other: 'Polynomial') -> 'Polynomial':
        if self.is_zero() or other.is_zero():
            return Polynomial([], self.field)
        product = [self.field.zero] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] = product[i + j] + a * b
        return Polynomial(product, self.field)

    def scaled(self, factor: FieldElement) -> 'Polynomial':
        return Polynomial([factor * c for c in self.coefficients], self.field)

    def __call__(self, x: FieldElement) -> FieldElement:
        """Horner evaluation."""
        result = self.field.zero
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def derivative(self) -> 'Polynomial':
        return Polynomial([c * k for k, c in enumerate(self.coefficients) if k > 0], self.field)

    def monic(self) -> 'Polynomial':
        """
        Divide by the leading coefficient.

        Raises:
            DivisionByZeroError: For the zero polynomial
        """
        if self.is_zero():
            raise DivisionByZeroError("The zero polynomial has no monic form")
        inverse = self.field.inverse(self.leading)
        return Polynomial([c * inverse for c in self.coefficients[:-1]] + [self.field.one], self.field)

    def divmod(self, divisor: 'Polynomial') -> Tuple['Polynomial', 'Polynomial']:
        """
        Long division: self = quotient * divisor + remainder, deg remainder < deg divisor.

        Raises:
            DivisionByZeroError: If the divisor is zero
        """
        if divisor.is_zero():
            raise DivisionByZeroError("Polynomial division by zero")
        remainder = list(self.coefficients)
        quotient = [self.field.zero] * max(len(remainder) - len(divisor) + 1, 0)
        inverse = self.field.inverse(divisor.leading)
        d = divisor.degree
        while len(remainder) > d and remainder:
            shift = len(remainder) - 1 - d
            factor = remainder[-1] * inverse
            quotient[shift] = factor
            for k in range(d):
                remainder[shift + k] = remainder[shift + k] - factor * divisor.coefficients[k]
            # The leading term cancels by construction
            remainder.pop()
            while remainder and self.field.is_zero(remainder[-1]):
                remainder.pop()
        return Polynomial(quotient, self.field), Polynomial(remainder, self.field)

    def __floordiv__(self, divisor: 'Polynomial') -> 'Polynomial':
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: 'Polynomial') -> 'Polynomial':
        return self.divmod(divisor)[1]

    def __repr__(self) -> str:
        terms = ', '.join(self.field.format(c) for c in self.coefficients)
        return f"Polynomial([{terms}], {self.field.name})"

def polynomial_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()

def squarefree_decomposition(f: Polynomial) -> List[Tuple[Polynomial, int]]:
    """
    Yun's square-free factorisation in characteristic zero.

    Args:
        f: Nonzero polynomial

    Returns:
        (a_i, i) pairs with f = lc(f) * prod a_i^i, each a_i monic, square-free
        and pairwise coprime; factors equal to 1 are omitted
    """
    field = f.field
    one = Polynomial([field.one], field)
    f = f.monic()
    derivative = f.derivative()
    a0 = polynomial_gcd(f, derivative)
    b = f // a0
    c = derivative // a0
    d = c - b.derivative()
    factors = []
    multiplicity = 1
    while b.degree > 0:
        a = polynomial_gcd(b, d)
        if a.degree > 0:
            factors.append((a, multiplicity))
        b_next = b // a
        c = d // a
        b = b_next
        d = c - b.derivative()
        multiplicity += 1
        if multiplicity > f.degree + 1:
            break
    logger.debug(f"Square-free decomposition degrees: {[(a.degree, m) for a, m in factors]}")
    return factors

def squarefree_part(f: Polynomial) -> Polynomial:
    """f / gcd(f, f'), made monic."""
    return (f // polynomial_gcd(f, f.derivative())).monic()

def char_poly(laplacian) -> Polynomial:
    """
    Characteristic polynomial det(xI - L) by the Faddeev-LeVerrier recurrence.

    Only ring operations and division by the integers 1..N are used, so
    the coefficients stay in the matrix's field.

    Args:
        laplacian: Square matrix with ``entries`` and ``field``

    Returns:
        Monic polynomial of degree N
    """
    field = laplacian.field
    n = len(laplacian.entries)
    # Nonzero entries per row; the Laplacian has one per edge end plus the diagonal
    rows = [[(l, value) for l, value in enumerate(row) if not _vanishes_identically(value)]
            for row in laplacian.entries]
    coefficients = [field.zero] * (n + 1)
    coefficients[n] = field.one
    m = [[field.zero] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I, with M_0 = 0
        if k > 1:
            previous = m
            m = [[field.sum(value * previous[l][j] for l, value in rows[i]) for j in range(n)]
                 for i in range(n)]
        for i in range(n):
            m[i][i] = m[i][i] + coefficients[n - k + 1]
        trace = field.sum(value * m[l][i] for i in range(n) for l, value in rows[i])
        coefficients[n - k] = -(trace * Fraction(1, k))
    return Polynomial(coefficients, field)

def _vanishes_identically(value: FieldElement) -> bool:
    if isinstance(value, LeviCivitaNumber):
        return value.is_exact_zero
    return value == 0
