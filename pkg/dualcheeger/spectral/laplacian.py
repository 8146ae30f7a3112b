"""
Normalized Laplacian, scalar product and the Green formula.

    (Lf)(x)  = sum_y (f(x) - f(y)) p(x, y)
    <f, g>   = sum_x f(x) g(x) b(x)
    <Lf, g>  = 1/2 sum_{x,y} (f(x) - f(y)) (g(x) - g(y)) b(x, y)
"""
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Mapping, Sequence, Tuple, Union

import numpy as np

from dualcheeger.exceptions import DimensionMismatchError
from dualcheeger.fields import LeviCivitaNumber, OrderedField, Ordering
from dualcheeger.fields.base import FieldElement
from dualcheeger.graph import OFGraph, VertexSubset

@dataclass(frozen=True)
class FunctionOnV:
    """A function V -> K, stored in vertex-index order."""

    values: Tuple[FieldElement, ...]
    field: OrderedField

    @classmethod
    def from_values(cls, graph: OFGraph, values: Union[Sequence, Mapping]) -> 'FunctionOnV':
        """
        Build a function from a sequence in vertex order or a label -> value mapping.

        Rationals and integers are embedded into the graph's field.
        """
        field = graph.field
        if isinstance(values, Mapping):
            ordered = [field.zero] * graph.size
            for vertex, value in values.items():
                ordered[graph.index_of(vertex)] = value
            values = ordered
        if len(values) != graph.size:
            raise DimensionMismatchError(f"Function has {len(values)} values for {graph.size} vertices")
        return cls(tuple(_embed(field, v) for v in values), field)

    @classmethod
    def constant(cls, graph: OFGraph, value=1) -> 'FunctionOnV':
        return cls.from_values(graph, [value] * graph.size)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int) -> FieldElement:
        return self.values[index]

    def __add__(self, other: 'FunctionOnV') -> 'FunctionOnV':
        _check_dimensions(self, other)
        return FunctionOnV(tuple(a + b for a, b in zip(self.values, other.values)), self.field)

    def __sub__(self, other: 'FunctionOnV') -> 'FunctionOnV':
        _check_dimensions(self, other)
        return FunctionOnV(tuple(a - b for a, b in zip(self.values, other.values)), self.field)

    def scaled(self, factor: FieldElement) -> 'FunctionOnV':
        return FunctionOnV(tuple(factor * v for v in self.values), self.field)

    def is_zero(self) -> bool:
        return all(self.field.is_zero(v) for v in self.values)

    def positive_support(self) -> VertexSubset:
        """V_f^+ = {x : f(x) > 0}."""
        return VertexSubset(sum(1 << i for i, v in enumerate(self.values)
                                if self.field.sign(v) is Ordering.GREATER))

    def negative_support(self) -> VertexSubset:
        """V_f^- = {x : f(x) < 0}."""
        return VertexSubset(sum(1 << i for i, v in enumerate(self.values)
                                if self.field.sign(v) is Ordering.LESS))

    def positive_part(self) -> 'FunctionOnV':
        """f_+ : f on V_f^+, zero elsewhere."""
        support = self.positive_support()
        return FunctionOnV(tuple(v if i in support else self.field.zero
                                 for i, v in enumerate(self.values)), self.field)

def _embed(field: OrderedField, value) -> FieldElement:
    if field.contains(value):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return field.from_fraction(Fraction(value))
    field.check(value)
    return value

def _check_dimensions(*items) -> None:
    sizes = {len(item) for item in items}
    if len(sizes) > 1:
        raise DimensionMismatchError(f"Dimension mismatch: {sorted(sizes)}")

@dataclass(frozen=True)
class LaplacianMatrix:
    """N x N matrix of the normalized Laplacian, rows in vertex order."""

    entries: Tuple[Tuple[FieldElement, ...], ...]
    field: OrderedField
    labels: Tuple[str, ...]
    graph: OFGraph = dataclass_field(compare=False, repr=False, default=None)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def row(self, i: int) -> Tuple[FieldElement, ...]:
        return self.entries[i]

    def trace(self) -> FieldElement:
        return self.field.sum(self.entries[i][i] for i in range(self.size))

    def standard_part(self) -> np.ndarray:
        """Float matrix of standard parts (plain float values for Archimedean backends)."""
        return np.array([[self.field.to_float(v) for v in row] for row in self.entries], dtype=float)

def build_laplacian(graph: OFGraph) -> LaplacianMatrix:
    """
    Normalized Laplacian: 1 on the diagonal, -p(x, y) off it.

    Raises:
        IsolatedVertexError: If some vertex is isolated
    """
    graph.require_no_isolated_vertices()
    field = graph.field
    n = graph.size
    rows = []
    for i in range(n):
        row = [field.zero] * n
        for j in graph.neighbors(i):
            row[j] = -graph.normalized_weight(i, j)
        row[i] = field.one
        rows.append(tuple(row))
    return LaplacianMatrix(tuple(rows), field, graph.labels, graph)

def apply_laplacian(laplacian: LaplacianMatrix, f: FunctionOnV) -> FunctionOnV:
    """
    Matrix-vector product Lf.

    Raises:
        DimensionMismatchError: If sizes differ
    """
    _check_dimensions(laplacian, f)
    field = laplacian.field
    return FunctionOnV(tuple(field.sum(a * v for a, v in zip(row, f.values) if not _is_structural_zero(a))
                             for row in laplacian.entries), field)

def _is_structural_zero(value: FieldElement) -> bool:
    if isinstance(value, LeviCivitaNumber):
        return value.is_exact_zero
    return value == 0

def inner_product(graph: OFGraph, f: FunctionOnV, g: FunctionOnV) -> FieldElement:
    """<f, g> = sum_x f(x) g(x) b(x)."""
    _check_dimensions(graph, f, g)
    return graph.field.sum(a * b * d for a, b, d in zip(f.values, g.values, graph.degrees()))

def green_form(graph: OFGraph, f: FunctionOnV, g: FunctionOnV) -> FieldElement:
    """1/2 sum_{x,y} (f(x) - f(y)) (g(x) - g(y)) b(x, y), summed once per edge."""
    _check_dimensions(graph, f, g)
    return graph.field.sum((f[i] - f[j]) * (g[i] - g[j]) * w for i, j, w in graph.edges())

def rayleigh_quotient(graph: OFGraph, f: FunctionOnV) -> FieldElement:
    """<Lf, f> / <f, f> for f != 0."""
    return graph.field.div(green_form(graph, f, f), inner_product(graph, f, f))

def standard_part_matrix(graph: OFGraph) -> np.ndarray:
    """
    Symmetric float matrix I - st(D^-1/2 B D^-1/2).

    Its eigenvalues are the standard parts of the Laplacian eigenvalues.
    Levi-Civita weights are taken with float coefficients so that the
    square roots always exist.

    Raises:
        IsolatedVertexError: If some vertex is isolated
    """
    graph.require_no_isolated_vertices()
    field = graph.field
    fallback = field.fallback()
    roots = [fallback.sqrt(field.to_fallback(d)) for d in graph.degrees()]
    n = graph.size
    matrix = np.eye(n)
    for i, j, w in graph.edges():
        entry = fallback.div(field.to_fallback(w), roots[i] * roots[j])
        value = fallback.to_float(entry)
        matrix[i, j] -= value
        matrix[j, i] -= value
    return matrix
