"""
Generators for the example graph families.

- ``triangle``: vertices x, y, z with b(x, y) = e^n and b(x, z) = b(y, z) = 1
- ``near-bipartite-complete``: complete graph on two parts of K vertices,
  weight e^n inside a part and 1 across
- ``complete-unit``: complete graph on N vertices with all weights 1
"""
from typing import Callable, Dict, Optional

from dualcheeger.exceptions import ValidationError
from dualcheeger.fields import Backend, LeviCivitaField, LeviCivitaNumber, make_field
from dualcheeger.graph import OFGraph
from dualcheeger.parsing import default_budget
from dualcheeger.utils.logger import logger

def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValidationError(message)

def _levi_civita_field(backend: Optional[str], exponent: int) -> LeviCivitaField:
    field = make_field(backend or Backend.LC_RATIONAL.value)
    _require(isinstance(field, LeviCivitaField),
             f"This family needs a Levi-Civita backend, got {field.name}")
    return field.with_budget(default_budget([LeviCivitaNumber.monomial(exponent)]))

def triangle(n: int = 1, backend: Optional[str] = None) -> OFGraph:
    """
    Triangle with one infinitesimal edge.

    Raises:
        ValidationError: If n < 1 or the backend is not Levi-Civita
    """
    _require(n >= 1, f"triangle needs n >= 1, got {n}")
    field = _levi_civita_field(backend, n)
    small = LeviCivitaNumber.monomial(n, exact=field.exact)
    return OFGraph(['x', 'y', 'z'],
                   [('x', 'y', small), ('x', 'z', field.one), ('y', 'z', field.one)],
                   field)

def near_bipartite_complete(k: int = 2, n: int = 1, backend: Optional[str] = None) -> OFGraph:
    """
    Complete graph on parts {u1..uK} and {v1..vK}.

    Raises:
        ValidationError: If k < 2, n < 1 or the backend is not Levi-Civita
    """
    _require(k >= 2, f"near-bipartite-complete needs k >= 2, got {k}")
    _require(n >= 1, f"near-bipartite-complete needs n >= 1, got {n}")
    field = _levi_civita_field(backend, n)
    small = LeviCivitaNumber.monomial(n, exact=field.exact)
    vertices = [f"u{i}" for i in range(1, k + 1)] + [f"v{i}" for i in range(1, k + 1)]
    edges = []
    for i in range(2 * k):
        for j in range(i + 1, 2 * k):
            same_part = (i < k) == (j < k)
            edges.append((i, j, small if same_part else field.one))
    return OFGraph(vertices, edges, field)

def complete_unit(n: int = 2, backend: Optional[str] = None) -> OFGraph:
    """
    Complete graph on n vertices with unit weights.

    Raises:
        ValidationError: If n < 2
    """
    _require(n >= 2, f"complete-unit needs n >= 2, got {n}")
    field = make_field(backend or Backend.RATIONAL.value)
    vertices = [f"x{i}" for i in range(1, n + 1)]
    edges = [(i, j, field.one) for i in range(n) for j in range(i + 1, n)]
    return OFGraph(vertices, edges, field)

GENERATORS: Dict[str, Callable[..., OFGraph]] = {
    'triangle': triangle,
    'near-bipartite-complete': near_bipartite_complete,
    'complete-unit': complete_unit,
}

def generate(family: str, n: Optional[int] = None, k: Optional[int] = None,
             backend: Optional[str] = None) -> OFGraph:
    """
    Build a member of a named family.

    ``n`` is the exponent for the Levi-Civita families and the vertex count
    for ``complete-unit``.

    Raises:
        ValidationError: For an unknown family or bad parameters
    """
    if family not in GENERATORS:
        raise ValidationError(f"Unknown family {family!r}; expected one of {', '.join(GENERATORS)}")
    logger.debug(f"Generating {family} with n={n}, k={k}")
    if family == 'triangle':
        return triangle(1 if n is None else n, backend)
    if family == 'near-bipartite-complete':
        return near_bipartite_complete(2 if k is None else k, 1 if n is None else n, backend)
    return complete_unit(2 if n is None else n, backend)
