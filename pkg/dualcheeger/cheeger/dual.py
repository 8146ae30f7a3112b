"""
Dual Cheeger constant by exhaustive enumeration.

    h = max over disjoint nonempty V1, V2 of 2 b(V1, V2) / (b(V1) + b(V2))

Every vertex goes to V1, V2 or neither.  Degree sums b(A) and internal
edge weights in(A) are tabulated once over all 2^N subsets, so each pair
costs one subtraction chain:

    b(V1, V2) = in(V1 | V2) - in(V1) - in(V2)

Candidates are compared by cross-multiplication; the only division is
the one producing the final value.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from dualcheeger.cheeger.verdicts import InequalityVerdict, Verdict, overall
from dualcheeger.config import MAX_BRUTEFORCE_VERTICES
from dualcheeger.exceptions import EdgelessGraphError, EnumerationLimitError, ValidationError
from dualcheeger.fields import LeviCivitaNumber, OrderedField, Ordering, leading_ratio_order
from dualcheeger.fields.base import FieldElement
from dualcheeger.graph import OFGraph, VertexSubset
from dualcheeger.utils import iter_submasks, lowest_bit_index, popcount
from dualcheeger.utils.logger import logger

# (b(V1, V2), b(V1) + b(V2), V1 mask, V2 mask); the factor 2 is applied once at the end
Candidate = Tuple[FieldElement, FieldElement, int, int]

@dataclass(frozen=True)
class CheegerCertificate:
    """
    The dual Cheeger constant with its witness pair.

    ``value`` equals ``numerator / denominator`` with numerator
    2 b(V1, V2) and denominator b(V1) + b(V2).
    """

    value: FieldElement
    first: VertexSubset
    second: VertexSubset
    numerator: FieldElement
    denominator: FieldElement
    field: OrderedField = dataclass_field(compare=False, repr=False)
    labels: Tuple[str, ...] = dataclass_field(default=(), compare=False, repr=False)
    verdicts: Tuple[InequalityVerdict, ...] = dataclass_field(default=(), compare=False)
    spectrum: Any = dataclass_field(default=None, compare=False, repr=False)
    notes: Tuple[str, ...] = dataclass_field(default=(), compare=False)

    @property
    def overall_verdict(self) -> Verdict:
        """Combined outcome of every recorded verdict."""
        return overall(self.verdicts)

    @property
    def witness(self) -> Tuple[VertexSubset, VertexSubset]:
        return self.first, self.second

    def witness_labels(self) -> Tuple[List[str], List[str]]:
        return ([self.labels[i] for i in self.first.indices()],
                [self.labels[i] for i in self.second.indices()])

    def to_dict(self) -> Dict[str, Any]:
        from dualcheeger.parsing.weight_parser import format_element
        first, second = self.witness_labels()
        data: Dict[str, Any] = {
            'value': format_element(self.value),
            'numerator': format_element(self.numerator),
            'denominator': format_element(self.denominator),
            'witness': {'V1': first, 'V2': second},
        }
        if self.verdicts:
            data['verdicts'] = [v.to_dict() for v in self.verdicts]
        if self.notes:
            data['notes'] = list(self.notes)
        return data

def parity_lower_bound(n: int) -> Fraction:
    """
    Lower bound on h for a graph with n vertices and at least one edge.

    n / (2(n - 1)) for even n, (n + 1) / (2n) for odd n.

    Raises:
        ValidationError: If n < 2
    """
    if n < 2:
        raise ValidationError(f"The lower bound needs at least 2 vertices, got {n}")
    if n % 2 == 0:
        return Fraction(n, 2 * (n - 1))
    return Fraction(n + 1, 2 * n)

class SubsetTables:
    """b(A), in(A) and the neighbourhood of A for every subset A of the vertex set."""

    def __init__(self, graph: OFGraph):
        field = graph.field
        n = graph.size
        size = 1 << n
        adjacency = [graph.adjacency_row(i) for i in range(n)]
        neighbor_masks = [sum(1 << j for j in graph.neighbors(i)) for i in range(n)]
        degrees = graph.degrees()

        self.degree_sum: List[FieldElement] = [field.zero] * size
        self.internal: List[FieldElement] = [field.zero] * size
        self.neighborhood: List[int] = [0] * size
        for mask in range(1, size):
            i = lowest_bit_index(mask)
            rest = mask & (mask - 1)
            self.degree_sum[mask] = self.degree_sum[rest] + degrees[i]
            self.neighborhood[mask] = self.neighborhood[rest] | neighbor_masks[i]
            linked = neighbor_masks[i] & rest
            internal = self.internal[rest]
            while linked:
                j = lowest_bit_index(linked)
                internal = internal + adjacency[i][j]
                linked &= linked - 1
            self.internal[mask] = internal

    def cut(self, first: int, second: int) -> FieldElement:
        """b(A, B) for disjoint A and B."""
        return self.internal[first | second] - self.internal[first] - self.internal[second]

def _better(field: OrderedField, candidate: Candidate, best: Optional[Candidate]) -> bool:
    """Strictly larger ratio; denominators are positive."""
    if best is None:
        return True
    if isinstance(candidate[0], LeviCivitaNumber):
        order = leading_ratio_order(candidate[0], candidate[1], best[0], best[1])
        if order is not None:
            return order is Ordering.GREATER
    return field.compare(candidate[0] * best[1], best[0] * candidate[1]) is Ordering.GREATER

def _scan(graph: OFGraph, first_start: int, first_stop: int) -> Optional[Candidate]:
    """Best pair with V1 mask in [first_start, first_stop), V2 ascending within each V1."""
    tables = SubsetTables(graph)
    field = graph.field
    full = graph.full_mask
    best: Optional[Candidate] = None
    for first in range(max(first_start, 1), first_stop):
        rest = full & ~first
        reachable = tables.neighborhood[first] & rest
        if not reachable:
            continue
        for second in iter_submasks(rest, ascending=True):
            if not second & reachable:
                continue
            candidate = (tables.cut(first, second),
                         tables.degree_sum[first] + tables.degree_sum[second], first, second)
            if _better(field, candidate, best):
                best = candidate
    return best

def _reduce(field: OrderedField, candidates: List[Optional[Candidate]]) -> Optional[Candidate]:
    best = None
    for candidate in candidates:
        if candidate is not None and _better(field, candidate, best):
            best = candidate
    return best

def dual_cheeger(graph: OFGraph, max_vertices: int = MAX_BRUTEFORCE_VERTICES,
                 workers: int = 1) -> CheegerCertificate:
    """
    Compute h by enumerating every pair of disjoint nonempty vertex sets.

    Args:
        graph: Graph with at least one edge and no isolated vertices
        max_vertices: Enumeration cap on N
        workers: Processes to split the V1 range over; the result does not
            depend on this

    Returns:
        The maximum with the lexicographically smallest (V1, V2) mask pair
        among all maximizers

    Raises:
        EdgelessGraphError: If the graph has no edge
        IsolatedVertexError: If some vertex is isolated
        EnumerationLimitError: If N exceeds ``max_vertices``
    """
    if graph.edge_count == 0:
        raise EdgelessGraphError("The dual Cheeger constant needs at least one edge")
    graph.require_no_isolated_vertices()
    n = graph.size
    if n > max_vertices:
        raise EnumerationLimitError(f"{n} vertices exceed the enumeration limit of {max_vertices}")
    if workers < 1:
        raise ValidationError(f"workers must be positive, got {workers}")

    field = graph.field
    stop = 1 << n
    logger.debug(f"Enumerating {3 ** n - 2 * 2 ** n + 1} disjoint pairs on {n} vertices")
    if workers == 1 or n < 4:
        best = _scan(graph, 1, stop)
    else:
        chunk = -(-stop // workers)
        bounds = [(start, min(start + chunk, stop)) for start in range(0, stop, chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_scan, graph, start, end) for start, end in bounds]
            best = _reduce(field, [future.result() for future in futures])

    cut, denominator, first, second = best
    numerator = field.from_int(2) * cut
    return CheegerCertificate(
        value=field.div(numerator, denominator),
        first=VertexSubset(first),
        second=VertexSubset(second),
        numerator=numerator,
        denominator=denominator,
        field=field,
        labels=graph.labels,
    )

def balanced_partition_maximum(graph: OFGraph, max_vertices: int = MAX_BRUTEFORCE_VERTICES
                               ) -> Tuple[FieldElement, VertexSubset, VertexSubset]:
    """
    Maximum of 2 b(V1, V2) / b(V) over partitions V = V1 + V2 with ||V1| - |V2|| <= 1.

    The value never exceeds h.

    Raises:
        EdgelessGraphError: If the graph has no edge
        EnumerationLimitError: If N exceeds ``max_vertices``
    """
    if graph.edge_count == 0:
        raise EdgelessGraphError("Balanced partitions need at least one edge")
    graph.require_no_isolated_vertices()
    n = graph.size
    if n > max_vertices:
        raise EnumerationLimitError(f"{n} vertices exceed the enumeration limit of {max_vertices}")
    field = graph.field
    tables = SubsetTables(graph)
    full = graph.full_mask
    two = field.from_int(2)
    total = tables.degree_sum[full]
    best: Optional[Candidate] = None
    for first in range(1, full):
        second = full & ~first
        if abs(popcount(first) - popcount(second)) > 1:
            continue
        candidate = (tables.cut(first, second), total, first, second)
        if _better(field, candidate, best):
            best = candidate
    cut, denominator, first, second = best
    return field.div(two * cut, denominator), VertexSubset(first), VertexSubset(second)
