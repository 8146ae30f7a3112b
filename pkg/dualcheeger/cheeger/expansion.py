"""
Expansion h(f) of the positive set of a function and the bound on W.

For f with positive set V+ = {x : f(x) > 0}:

    h(f) = min over nonempty S in V+ of b(S, V - S) / b(S)
    W    = <L f+, f+> / <f+, f+>

and 1 - sqrt(1 - h(f)^2) <= W <= 1 + sqrt(1 - h(f)^2).
"""
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from dualcheeger.cheeger.dual import SubsetTables
from dualcheeger.cheeger.verdicts import InequalityVerdict, Verdict, check_relation, overall, render_side
from dualcheeger.exceptions import EmptyPositiveSetError, FullPositiveSetError, NotRepresentableError
from dualcheeger.fields import Ordering
from dualcheeger.fields.base import FieldElement
from dualcheeger.graph import OFGraph, VertexSubset
from dualcheeger.spectral.laplacian import FunctionOnV, rayleigh_quotient
from dualcheeger.utils import iter_submasks
from dualcheeger.utils.logger import logger

@dataclass(frozen=True)
class RayleighBoundResult:
    """h(f), W and the two-sided bound on W."""

    h: FieldElement
    w: FieldElement
    lower: Any
    upper: Any
    verdict: Verdict
    minimizer: VertexSubset
    checks: Tuple[InequalityVerdict, ...] = ()
    note: str = ''

    def to_dict(self) -> Dict[str, Any]:
        return {
            'h': render_side(self.h),
            'W': render_side(self.w),
            'lower': render_side(self.lower),
            'upper': render_side(self.upper),
            'verdict': self.verdict.value,
            'note': self.note,
        }

def _positive_set(graph: OFGraph, f: FunctionOnV) -> VertexSubset:
    graph.require_no_isolated_vertices()
    positive = f.positive_support()
    if not positive:
        raise EmptyPositiveSetError("f has no positive value")
    if positive.mask == graph.full_mask:
        raise FullPositiveSetError("f is positive everywhere; V - V+ is empty")
    return positive

def minimize_expansion(graph: OFGraph, f: FunctionOnV) -> Tuple[FieldElement, VertexSubset]:
    """
    h(f) together with the smallest-mask minimizing S.

    Raises:
        EmptyPositiveSetError: If f has no positive value
        FullPositiveSetError: If f is positive on every vertex
        IsolatedVertexError: If some vertex is isolated
    """
    positive = _positive_set(graph, f)
    field = graph.field
    tables = SubsetTables(graph)
    two = field.from_int(2)
    best: Optional[Tuple[FieldElement, FieldElement, int]] = None
    for subset in iter_submasks(positive.mask, ascending=True):
        volume = tables.degree_sum[subset]
        # b(S) = 2 in(S) + b(S, V - S)
        boundary = volume - two * tables.internal[subset]
        if best is None or field.compare(boundary * best[1], best[0] * volume) is Ordering.LESS:
            best = (boundary, volume, subset)
    boundary, volume, subset = best
    return field.div(boundary, volume), VertexSubset(subset)

def h_of_f(graph: OFGraph, f: FunctionOnV) -> FieldElement:
    """
    h(f) by enumerating the nonempty subsets of V+.

    Raises:
        EmptyPositiveSetError: If f has no positive value
        FullPositiveSetError: If f is positive on every vertex
        IsolatedVertexError: If some vertex is isolated
    """
    return minimize_expansion(graph, f)[0]

def positive_part_bound_check(graph: OFGraph, f: FunctionOnV) -> RayleighBoundResult:
    """
    Check 1 - sqrt(1 - h(f)^2) <= W <= 1 + sqrt(1 - h(f)^2).

    When the square root is not representable in the graph's field the
    bounds are computed in the fallback backend and the result says so.
    """
    field = graph.field
    h, minimizer = minimize_expansion(graph, f)
    w = rayleigh_quotient(graph, f.positive_part())
    radicand = field.one - h * h
    note = ''
    try:
        root = field.sqrt(radicand)
    except NotRepresentableError as e:
        root = e.fallback
        note = f"sqrt(1 - h(f)^2) computed in the {field.fallback().name} backend"
        logger.warning(f"sqrt({field.format(radicand)}) is not representable, using the fallback value")
    lower = 1 - root
    upper = 1 + root
    checks = (
        check_relation(field, 'lower bound on W', lower, '<=', w),
        check_relation(field, 'upper bound on W', w, '<=', upper),
    )
    return RayleighBoundResult(h, w, lower, upper, overall(checks), minimizer, checks, note)
