"""
Certification of the dual Cheeger inequalities.

For a graph with at least one edge and no isolated vertices:

    1/2 < h <= 1, h >= the parity bound for N vertices
    h = 1 iff the graph is bipartite (connected graphs)
    2h <= lambda_max <= 1 + sqrt(1 - (1 - h)^2)
    N/(N-1) <= lambda_max <= 2, lambda_max = 2 iff bipartite (connected graphs)
    multiplicity of the eigenvalue 0 = number of components
"""
from dataclasses import replace
from fractions import Fraction
from typing import Any, List, Mapping, Optional

from dualcheeger.cheeger.dual import CheegerCertificate, dual_cheeger, parity_lower_bound
from dualcheeger.cheeger.verdicts import (
    InequalityVerdict,
    Verdict,
    check_equivalence,
    check_relation,
    common_field,
    overall,
    skipped,
)
from dualcheeger.config import MAX_BRUTEFORCE_VERTICES
from dualcheeger.exceptions import NotRepresentableError, ParseError, ValidationError
from dualcheeger.fields import LeviCivitaField, Ordering
from dualcheeger.fields.base import FieldElement
from dualcheeger.graph import OFGraph
from dualcheeger.spectral import Spectrum, build_laplacian, eigenvalues
from dualcheeger.utils.logger import logger

EXPECTATION_KEYS = ('h', 'lambda_max', 'zero_multiplicity', 'components', 'bipartite', 'connected')

def upper_spectral_bound(graph: OFGraph, h: FieldElement) -> Any:
    """
    1 + sqrt(1 - (1 - h)^2).

    Returns:
        The bound in the graph's field, or in its fallback backend when the
        square root is not representable
    """
    field = graph.field
    complement = field.one - h
    radicand = field.one - complement * complement
    try:
        root = field.sqrt(radicand)
    except NotRepresentableError as e:
        logger.warning(f"sqrt({field.format(radicand)}) is not representable, using the fallback value")
        root = e.fallback
    return 1 + root

def _largest(spectrum: Spectrum):
    largest = spectrum.largest
    if largest.value is not None:
        return largest.value, ''
    return largest.approximation, f"largest eigenvalue is {largest.status.value}; float approximation used"

def _equals(field, left, right) -> Ordering:
    target, (a, b) = common_field(field, [left, right])
    return target.compare(a, b)

def inequality_verdicts(graph: OFGraph, certificate: CheegerCertificate,
                        spectrum: Spectrum) -> List[InequalityVerdict]:
    """Every inequality for h and lambda_max, each recorded once."""
    field = graph.field
    n = graph.size
    h = certificate.value
    connected = graph.is_connected()
    bipartite, _ = graph.is_bipartite()
    components = len(graph.connected_components())
    largest, largest_note = _largest(spectrum)
    not_connected = "graph is not connected"

    verdicts = [
        check_relation(field, 'h <= 1', h, '<=', 1),
        check_relation(field, 'h > 1/2', h, '>', Fraction(1, 2)),
        check_relation(field, 'h >= parity bound', h, '>=', parity_lower_bound(n)),
    ]
    if connected:
        verdicts.append(check_relation(field, 'lambda_max >= N/(N-1)', largest, '>=',
                                       Fraction(n, n - 1), largest_note))
    else:
        verdicts.append(skipped('lambda_max >= N/(N-1)', '>=', not_connected))
    verdicts.append(check_relation(field, 'lambda_max <= 2', largest, '<=', 2, largest_note))

    if connected:
        ordering = _equals(field, largest, 2)
        # A float approximation equal to 2 does not decide the equality
        certain = ordering is not Ordering.INDISTINGUISHABLE and not (largest_note and ordering.is_equalish)
        verdicts.append(check_equivalence('lambda_max = 2 iff bipartite', ordering.is_equalish, bipartite,
                                          certain, largest_note))
        # Compared without division: h = 1 iff numerator = denominator
        ordering = field.compare(certificate.numerator, certificate.denominator)
        verdicts.append(check_equivalence('h = 1 iff bipartite', ordering.is_equalish, bipartite,
                                          ordering is not Ordering.INDISTINGUISHABLE))
    else:
        verdicts.append(skipped('lambda_max = 2 iff bipartite', 'iff', not_connected))
        verdicts.append(skipped('h = 1 iff bipartite', 'iff', not_connected))

    two_h = field.from_int(2) * h
    upper = upper_spectral_bound(graph, h)
    verdicts.append(check_relation(field, '2h <= lambda_max', two_h, '<=', largest, largest_note))
    verdicts.append(check_relation(field, 'lambda_max <= 1 + sqrt(1 - (1 - h)^2)', largest, '<=', upper,
                                   largest_note))
    if bipartite:
        verdicts.append(check_relation(field, '2h = lambda_max (bipartite)', two_h, '=', largest,
                                       largest_note))
        verdicts.append(check_relation(field, 'lambda_max = 1 + sqrt(1 - (1 - h)^2) (bipartite)',
                                       largest, '=', upper, largest_note))
    verdicts.append(check_relation(field, 'multiplicity of 0 = number of components',
                                   spectrum.zero_multiplicity(), '=', components))
    return verdicts

def expectation_verdicts(graph: OFGraph, certificate: CheegerCertificate, spectrum: Spectrum,
                         expectations: Mapping[str, Any]) -> List[InequalityVerdict]:
    """
    Compare computed values with expected annotations.

    Raises:
        ValidationError: For an unknown key or an unparseable value
    """
    field = graph.field
    verdicts = []
    for key, expected in expectations.items():
        if key not in EXPECTATION_KEYS:
            raise ValidationError(f"Unknown expectation {key!r}; expected one of {', '.join(EXPECTATION_KEYS)}")
        name = f"expected {key}"
        if key in ('bipartite', 'connected'):
            if not isinstance(expected, bool):
                raise ValidationError(f"Expectation {key!r} must be true or false")
            actual = graph.is_bipartite()[0] if key == 'bipartite' else graph.is_connected()
            verdicts.append(check_equivalence(name, actual, expected))
        elif key in ('zero_multiplicity', 'components'):
            if isinstance(expected, bool) or not isinstance(expected, int):
                raise ValidationError(f"Expectation {key!r} must be an integer")
            actual = (spectrum.zero_multiplicity() if key == 'zero_multiplicity'
                      else len(graph.connected_components()))
            verdicts.append(check_relation(field, name, actual, '=', expected))
        else:
            try:
                value = field.parse(str(expected))
            except ParseError as e:
                raise ValidationError(f"Expectation {key!r}: {e}") from e
            actual = certificate.value if key == 'h' else _largest(spectrum)[0]
            verdicts.append(check_relation(field, name, actual, '=', value))
    return verdicts

def _certify_once(graph: OFGraph, max_vertices: int, workers: int,
                  expectations: Optional[Mapping[str, Any]]) -> CheegerCertificate:
    certificate = dual_cheeger(graph, max_vertices, workers)
    spectrum = eigenvalues(build_laplacian(graph))
    verdicts = inequality_verdicts(graph, certificate, spectrum)
    if expectations:
        verdicts.extend(expectation_verdicts(graph, certificate, spectrum, expectations))
    return replace(certificate, verdicts=tuple(verdicts), spectrum=spectrum)

def certify(graph: OFGraph, max_vertices: int = MAX_BRUTEFORCE_VERTICES, workers: int = 1,
            expectations: Optional[Mapping[str, Any]] = None, retry: bool = True) -> CheegerCertificate:
    """
    Compute h and the spectrum and check every inequality between them.

    Args:
        graph: Graph with at least one edge and no isolated vertices
        max_vertices: Enumeration cap on N
        workers: Processes for the enumeration
        expectations: Optional expected values keyed by ``EXPECTATION_KEYS``
        retry: Recompute once with a doubled truncation budget if some
            Levi-Civita verdict is indistinguishable

    Returns:
        The certificate with its spectrum and verdicts
    """
    result = _certify_once(graph, max_vertices, workers, expectations)
    field = graph.field
    if retry and isinstance(field, LeviCivitaField) and result.overall_verdict is Verdict.INDISTINGUISHABLE:
        budget = field.budget * 2
        logger.info(f"Indistinguishable verdict, retrying with truncation budget {budget}")
        widened = graph.with_field(field.with_budget(budget), lambda w: w)
        result = _certify_once(widened, max_vertices, workers, expectations)
        result = replace(result, notes=result.notes + (f"retried with truncation budget {budget}",))
    logger.info(f"Certification verdict: {overall(result.verdicts).value}")
    return result
