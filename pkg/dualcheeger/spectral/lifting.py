"""
Newton lifting of polynomial roots.

A simple root known only through its standard part is refined by Newton
iteration in the polynomial's own field.  In the Levi-Civita field every
step roughly doubles the number of correct orders, and the iteration
stops once two successive iterates cannot be told apart.
"""
from fractions import Fraction
from typing import Optional

from dualcheeger.config import NEWTON_EXTRA_ITERATIONS
from dualcheeger.exceptions import DivisionByZeroError, LiftingError
from dualcheeger.fields import LeviCivitaField, LeviCivitaNumber, OrderedField
from dualcheeger.fields.base import FieldElement
from dualcheeger.spectral.polynomial import Polynomial
from dualcheeger.utils.logger import logger

def smallest_positive_exponent(poly: Polynomial) -> Optional[Fraction]:
    """Smallest positive exponent among Levi-Civita coefficients, None if there is none."""
    exponents = [q for c in poly.coefficients if isinstance(c, LeviCivitaNumber)
                 for q, _ in c.terms if q > 0]
    return min(exponents) if exponents else None

def iteration_cap(poly: Polynomial, field: OrderedField) -> int:
    """2 * (budget / leading gap) + NEWTON_EXTRA_ITERATIONS."""
    if not isinstance(field, LeviCivitaField):
        return 2 * NEWTON_EXTRA_ITERATIONS
    gap = smallest_positive_exponent(poly) or Fraction(1)
    return int(2 * (field.budget / gap)) + NEWTON_EXTRA_ITERATIONS

def newton_lift(poly: Polynomial, start: FieldElement, field: OrderedField,
                max_iterations: Optional[int] = None) -> FieldElement:
    """
    Refine a simple root of ``poly`` starting from ``start``.

    Args:
        poly: Polynomial over ``field``
        start: Initial approximation, usually the standard part of the root
        field: Field used for the division in each step
        max_iterations: Iteration cap (default: ``iteration_cap``)

    Returns:
        The lifted root

    Raises:
        LiftingError: If the derivative vanishes or the iteration does not settle
    """
    if max_iterations is None:
        max_iterations = iteration_cap(poly, field)
    derivative = poly.derivative()
    x = start
    for iteration in range(max_iterations):
        try:
            step = field.div(poly(x), derivative(x))
        except DivisionByZeroError as e:
            raise LiftingError(f"Derivative vanishes at {field.format(x)}: root is not simple") from e
        following = x - step
        if field.compare(following, x).is_equalish:
            logger.debug(f"Newton lifting settled after {iteration + 1} iterations")
            return following
        x = following
    raise LiftingError(f"Newton lifting did not settle within {max_iterations} iterations")
