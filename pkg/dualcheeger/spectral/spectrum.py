"""
Laplacian spectra.

Float graphs are diagonalized directly with the Jacobi solver.  Exact and
Levi-Civita graphs go through the characteristic polynomial: Yun's
square-free decomposition gives the multiplicities, the standard parts of
the roots of every square-free factor come from its companion matrix, and
each simple root is lifted back into the field by Newton iteration.
"""
import functools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from dualcheeger.config import RATIONALIZE_MAX_DENOMINATOR, ROOT_CLUSTER_TOLERANCE
from dualcheeger.exceptions import LiftingError, NotRepresentableError, ZeroVectorError
from dualcheeger.fields import LeviCivitaField, LeviCivitaNumber, OrderedField, Ordering, RealField
from dualcheeger.fields.base import FieldElement
from dualcheeger.spectral.eigensolver import cluster_values, jacobi_eigenvalues
from dualcheeger.spectral.laplacian import (
    FunctionOnV,
    LaplacianMatrix,
    _embed,
    apply_laplacian,
    standard_part_matrix,
)
from dualcheeger.spectral.lifting import newton_lift
from dualcheeger.spectral.polynomial import Polynomial, char_poly, squarefree_decomposition
from dualcheeger.utils.logger import logger

class EigenvalueStatus(Enum):
    """How an eigenvalue was obtained."""
    EXACT = "exact"
    LIFTED = "lifted-to-truncation"
    FLOAT_APPROXIMATE = "float-approximate"
    NOT_REPRESENTABLE = "not-representable"

    @classmethod
    def from_string(cls, value: str) -> 'EigenvalueStatus':
        """Convert string to EigenvalueStatus."""
        for member in cls:
            if member.value == value:
                return member
        raise ValueError(f"Unknown eigenvalue status: {value}")

@dataclass(frozen=True)
class Eigenvalue:
    """One distinct eigenvalue with its multiplicity."""

    value: Optional[FieldElement]
    multiplicity: int
    status: EigenvalueStatus
    approximation: float

    @property
    def is_representable(self) -> bool:
        return self.value is not None

    def to_dict(self) -> Dict[str, Any]:
        from dualcheeger.parsing.weight_parser import format_element
        return {
            'value': format_element(self.value) if self.value is not None else None,
            'multiplicity': self.multiplicity,
            'status': self.status.value,
            'approximation': self.approximation,
        }

@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in ascending order, with multiplicities summing to N."""

    eigenvalues: Tuple[Eigenvalue, ...]
    field: OrderedField

    @property
    def size(self) -> int:
        return sum(e.multiplicity for e in self.eigenvalues)

    def values(self) -> List[Eigenvalue]:
        """lambda_0, ..., lambda_{N-1}, each eigenvalue repeated by multiplicity."""
        return [e for e in self.eigenvalues for _ in range(e.multiplicity)]

    @property
    def largest(self) -> Eigenvalue:
        return self.eigenvalues[-1]

    @property
    def smallest(self) -> Eigenvalue:
        return self.eigenvalues[0]

    def zero_multiplicity(self) -> int:
        """
        Multiplicity of the eigenvalue 0.

        Zero is always split off the characteristic polynomial before root
        finding, so unresolved clusters near 0 are infinitesimal and not counted.
        """
        return sum(e.multiplicity for e in self.eigenvalues
                   if e.value is not None and _vanishes(e.value, self.field))

    def approximations(self) -> List[float]:
        return [e.approximation for e in self.values()]

    @property
    def fully_representable(self) -> bool:
        return all(e.is_representable for e in self.eigenvalues)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'eigenvalues': [e.to_dict() for e in self.eigenvalues],
            'size': self.size,
        }

def _vanishes(value: FieldElement, field: OrderedField) -> bool:
    # Lifted roots may carry float coefficients inside an exact field
    if isinstance(value, LeviCivitaNumber):
        return value.compare(LeviCivitaNumber.zero(exact=value.exact)).is_equalish
    return field.is_zero(value)

def eigenvalues(laplacian: LaplacianMatrix, budget=None) -> Spectrum:
    """
    Spectrum of a normalized Laplacian.

    Args:
        laplacian: Matrix from ``build_laplacian``
        budget: Truncation budget for the Levi-Civita root lifting
            (default: the field's own budget)

    Returns:
        The spectrum in ascending order; roots that cannot be certified are
        reported per eigenvalue as not representable
    """
    field = laplacian.field
    if budget is not None and isinstance(field, LeviCivitaField):
        field = field.with_budget(budget)
    if isinstance(field, RealField):
        result = _float_spectrum(laplacian, field)
    elif isinstance(field, LeviCivitaField) and not field.exact:
        result = _clustered_spectrum(laplacian, field)
    else:
        result = _exact_spectrum(laplacian, field)
    if result.size != laplacian.size:
        logger.warning(f"Recovered {result.size} of {laplacian.size} eigenvalues")
    return result

def _float_spectrum(laplacian: LaplacianMatrix, field: RealField) -> Spectrum:
    values = jacobi_eigenvalues(standard_part_matrix(laplacian.graph))
    found = [Eigenvalue(float(mean), count, EigenvalueStatus.FLOAT_APPROXIMATE, float(mean))
             for mean, count in cluster_values(values, ROOT_CLUSTER_TOLERANCE)]
    return Spectrum(tuple(found), field)

def _clustered_spectrum(laplacian: LaplacianMatrix, field: LeviCivitaField) -> Spectrum:
    """
    Float-coefficient Levi-Civita spectrum: no gcd chain, clusters reported as such.

    Round-off keeps the low coefficients of the characteristic polynomial
    away from zero, so the kernel is split off structurally: x^c divides it,
    c being the number of connected components.
    """
    components = len(laplacian.graph.connected_components())
    poly, zeros = _split_zero(char_poly(laplacian), known=components)
    shadows = sorted(jacobi_eigenvalues(standard_part_matrix(laplacian.graph)), key=abs)[zeros:]
    found = [Eigenvalue(field.zero, zeros, EigenvalueStatus.FLOAT_APPROXIMATE, 0.0)] if zeros else []
    for mean, count in cluster_values(sorted(shadows), ROOT_CLUSTER_TOLERANCE):
        if count > 1:
            logger.warning(f"Eigenvalue cluster of size {count} at {mean:.12g} is reported unresolved")
            found.append(Eigenvalue(None, count, EigenvalueStatus.NOT_REPRESENTABLE, float(mean)))
            continue
        try:
            value = newton_lift(poly, LeviCivitaNumber.constant(float(mean), exact=False), field)
            found.append(Eigenvalue(value, 1, EigenvalueStatus.FLOAT_APPROXIMATE, float(mean)))
        except LiftingError as e:
            logger.warning(f"Could not lift eigenvalue near {mean:.12g}: {e}")
            found.append(Eigenvalue(None, 1, EigenvalueStatus.NOT_REPRESENTABLE, float(mean)))
    return Spectrum(tuple(_sorted(found, field)), field)

def _exact_spectrum(laplacian: LaplacianMatrix, field: OrderedField) -> Spectrum:
    poly, zeros = _split_zero(char_poly(laplacian))
    found = [Eigenvalue(field.zero, zeros, EigenvalueStatus.EXACT, 0.0)] if zeros else []
    if poly.degree > 0:
        factors = squarefree_decomposition(poly)
        if sum(factor.degree * multiplicity for factor, multiplicity in factors) != poly.degree:
            logger.warning("Square-free decomposition lost degrees at this truncation; "
                           "using the whole polynomial")
            factors = [(poly.monic(), 1)]
        for factor, multiplicity in factors:
            found.extend(_factor_roots(factor, multiplicity, field))
    return Spectrum(tuple(_sorted(found, field)), field)

def _split_zero(poly: Polynomial, known: int = 0) -> Tuple[Polynomial, int]:
    """
    Divide out x^m for the largest m with vanishing low coefficients.

    The first ``known`` coefficients are dropped unconditionally.
    """
    zeros = min(known, poly.degree)
    while zeros < poly.degree and poly.field.is_zero(poly[zeros]):
        zeros += 1
    return Polynomial(poly.coefficients[zeros:], poly.field), zeros

def _standard_coefficients(factor: Polynomial) -> List[Fraction]:
    return [c.standard_part() if isinstance(c, LeviCivitaNumber) else Fraction(c)
            for c in factor.coefficients]

def _evaluate(coefficients: List[Fraction], x: Fraction) -> Fraction:
    result = Fraction(0)
    for c in reversed(coefficients):
        result = result * x + c
    return result

def _factor_roots(factor: Polynomial, multiplicity: int, field: OrderedField) -> List[Eigenvalue]:
    """Roots of one monic square-free factor, each with the factor's multiplicity."""
    if factor.degree == 1:
        value = -factor.coefficients[0]
        status = EigenvalueStatus.LIFTED if isinstance(value, LeviCivitaNumber) else EigenvalueStatus.EXACT
        return [Eigenvalue(value, multiplicity, status, field.to_float(value))]

    shadow = _standard_coefficients(factor)
    roots = np.roots([float(c) for c in reversed(shadow)])
    results = []
    real_roots = []
    for root in roots:
        if abs(root.imag) > ROOT_CLUSTER_TOLERANCE:
            logger.warning(f"Non-real standard-part root {root} of a square-free factor")
            results.append(Eigenvalue(None, multiplicity, EigenvalueStatus.NOT_REPRESENTABLE, float(root.real)))
        else:
            real_roots.append(float(root.real))
    for mean, count in cluster_values(real_roots, ROOT_CLUSTER_TOLERANCE):
        if count > 1:
            logger.warning(f"Degenerate standard-part root {mean:.12g} of a square-free factor")
            results.append(Eigenvalue(None, multiplicity * count, EigenvalueStatus.NOT_REPRESENTABLE, mean))
            continue
        results.append(_lift_simple_root(factor, shadow, mean, multiplicity, field))
    return results

def _lift_simple_root(factor: Polynomial, shadow: List[Fraction], approximation: float,
                      multiplicity: int, field: OrderedField) -> Eigenvalue:
    candidate = Fraction(approximation).limit_denominator(RATIONALIZE_MAX_DENOMINATOR)
    rational_shadow = _evaluate(shadow, candidate) == 0
    if not isinstance(field, LeviCivitaField):
        if rational_shadow:
            return Eigenvalue(candidate, multiplicity, EigenvalueStatus.EXACT, float(candidate))
        logger.info(f"Eigenvalue near {approximation:.12g} is irrational")
        return Eigenvalue(None, multiplicity, EigenvalueStatus.NOT_REPRESENTABLE, approximation)
    try:
        if rational_shadow:
            value = newton_lift(factor, field.from_fraction(candidate), field)
            return Eigenvalue(value, multiplicity, EigenvalueStatus.LIFTED, float(candidate))
        fallback = field.fallback()
        floating = Polynomial([field.to_fallback(c) for c in factor.coefficients], fallback)
        value = newton_lift(floating, fallback.from_fraction(Fraction(approximation)), fallback)
        return Eigenvalue(value, multiplicity, EigenvalueStatus.FLOAT_APPROXIMATE, approximation)
    except (LiftingError, NotRepresentableError) as e:
        logger.warning(f"Could not lift eigenvalue near {approximation:.12g}: {e}")
        return Eigenvalue(None, multiplicity, EigenvalueStatus.NOT_REPRESENTABLE, approximation)

def _compare_eigenvalues(a: Eigenvalue, b: Eigenvalue, field: OrderedField) -> int:
    if a.value is not None and b.value is not None:
        x, y = a.value, b.value
        if isinstance(x, LeviCivitaNumber) and x.exact != y.exact:
            x, y = x.to_float_coefficients(), y.to_float_coefficients()
        ordering = x.compare(y) if isinstance(x, LeviCivitaNumber) else field.compare(x, y)
        if ordering is Ordering.LESS:
            return -1
        if ordering is Ordering.GREATER:
            return 1
    return (a.approximation > b.approximation) - (a.approximation < b.approximation)

def _sorted(found: List[Eigenvalue], field: OrderedField) -> List[Eigenvalue]:
    return sorted(found, key=functools.cmp_to_key(lambda a, b: _compare_eigenvalues(a, b, field)))

def verify_eigenpair(laplacian: LaplacianMatrix, value: FieldElement, vector: FunctionOnV) -> bool:
    """
    Check L v = lambda v.

    Zero means exactly zero for exact backends, within tolerance for floats,
    and indistinguishable from zero up to truncation for Levi-Civita numbers.

    Raises:
        ZeroVectorError: If v is zero
    """
    field = laplacian.field
    if vector.is_zero():
        raise ZeroVectorError("An eigenfunction must be nonzero")
    value = _embed(field, value)
    image = apply_laplacian(laplacian, vector)
    return all(field.is_zero(image[i] - value * vector[i]) for i in range(len(vector)))
