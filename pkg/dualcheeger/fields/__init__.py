"""
Ordered-field backends.

Four backends share the ``OrderedField`` contract: exact rationals,
tolerance-compared floats, and the truncated Levi-Civita field with
either exact rational or float coefficients.
"""

from dualcheeger.fields.base import Backend, FieldElement, OrderedField, Ordering
from dualcheeger.fields.rational import RationalField, rational_sqrt
from dualcheeger.fields.real import RealField
from dualcheeger.fields.levi_civita import (
    INFINITY,
    LeviCivitaField,
    LeviCivitaNumber,
    converges,
    current_budget,
    epsilon,
    leading_ratio_order,
    truncation_budget,
    within_order,
)

def make_field(backend, budget=None) -> OrderedField:
    """
    Create the field for a backend tag.

    Args:
        backend: ``Backend`` member or its string value
        budget: Truncation budget, Levi-Civita backends only

    Returns:
        The field instance
    """
    if isinstance(backend, str):
        backend = Backend.from_string(backend)
    if backend is Backend.RATIONAL:
        return RationalField()
    if backend is Backend.FLOAT:
        return RealField()
    return LeviCivitaField(exact=backend is Backend.LC_RATIONAL, budget=budget)

__all__ = [
    'Backend', 'FieldElement', 'OrderedField', 'Ordering',
    'RationalField', 'RealField', 'rational_sqrt',
    'INFINITY', 'LeviCivitaField', 'LeviCivitaNumber',
    'converges', 'current_budget', 'epsilon', 'leading_ratio_order', 'truncation_budget',
    'within_order',
    'make_field',
]
