"""
Graphs over an ordered field.

An ``OFGraph`` is a finite vertex set with a symmetric, loop-free weight
function b whose nonzero values are positive elements of an ordered
field.  Each unordered pair is stored once, so b(x, y) = b(y, x) holds by
construction.  Vertex subsets are bitmasks over the vertex indices.
"""
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from dualcheeger.config import MAX_VERTICES
from dualcheeger.exceptions import (
    DuplicateEdgeError,
    DuplicateVertexError,
    IsolatedVertexError,
    NonPositiveWeightError,
    OverlappingSubsetsError,
    SelfLoopError,
    TooManyVerticesError,
    UnknownVertexError,
    ValidationError,
)
from dualcheeger.fields.base import FieldElement, OrderedField, Ordering
from dualcheeger.utils import indices_from_mask, mask_from_indices, popcount
from dualcheeger.utils.logger import logger

Vertex = Union[str, int]

@dataclass(frozen=True, order=True)
class VertexSubset:
    """A set of vertices, stored as a bitmask over vertex indices."""

    mask: int = 0

    def indices(self) -> List[int]:
        return indices_from_mask(self.mask)

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())

    def __len__(self) -> int:
        return popcount(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def isdisjoint(self, other: 'VertexSubset') -> bool:
        return not self.mask & other.mask

    def union(self, other: 'VertexSubset') -> 'VertexSubset':
        return VertexSubset(self.mask | other.mask)

def _is_positive(field: OrderedField, value: FieldElement) -> bool:
    # Strict sign of the raw value; the float tolerance applies to equality only
    if isinstance(value, float):
        return value > 0
    return field.sign(value) is Ordering.GREATER

class OFGraph:
    """
    Finite graph with positive edge weights in an ordered field.

    Instances are immutable; derived graphs (subgraphs, rescaled graphs)
    are new objects.
    """

    def __init__(self, vertices: Sequence[str], edges: Iterable[Tuple[Vertex, Vertex, FieldElement]],
                 field: OrderedField):
        """
        Build a graph and validate it.

        Args:
            vertices: Distinct vertex labels, in index order
            edges: (u, v, weight) triples, u and v given by label or index
            field: Field the weights belong to

        Raises:
            TooManyVerticesError: If there are more than MAX_VERTICES vertices
            DuplicateVertexError: If a label repeats
            UnknownVertexError: If an edge names a missing vertex
            SelfLoopError: If an edge joins a vertex to itself
            DuplicateEdgeError: If an unordered pair repeats
            NonPositiveWeightError: If a weight is not strictly positive
        """
        labels = tuple(str(v) for v in vertices)
        if len(labels) > MAX_VERTICES:
            raise TooManyVerticesError(f"{len(labels)} vertices exceed the limit of {MAX_VERTICES}")
        self._labels = labels
        self._index: Dict[str, int] = {}
        for i, label in enumerate(labels):
            if label in self._index:
                raise DuplicateVertexError(f"Vertex {label!r} is listed more than once")
            self._index[label] = i
        self.field = field

        n = len(labels)
        self._weights: Dict[Tuple[int, int], FieldElement] = {}
        self._adjacency: List[List[FieldElement]] = [[field.zero] * n for _ in range(n)]
        for u, v, weight in edges:
            i, j = self.index_of(u), self.index_of(v)
            if i == j:
                raise SelfLoopError(f"Edge ({labels[i]}, {labels[j]}) is a loop")
            pair = (min(i, j), max(i, j))
            if pair in self._weights:
                raise DuplicateEdgeError(f"Edge ({labels[pair[0]]}, {labels[pair[1]]}) is listed more than once")
            field.check(weight)
            if not _is_positive(field, weight):
                raise NonPositiveWeightError(
                    f"Edge ({labels[i]}, {labels[j]}) has non-positive weight {field.format(weight)}"
                )
            self._weights[pair] = weight
            self._adjacency[i][j] = weight
            self._adjacency[j][i] = weight
        self._degrees = tuple(field.sum(self._weights[self._pair(i, j)] for j in self._neighbors(i))
                              for i in range(n))

        isolated = self.isolated_vertices()
        if isolated:
            logger.warning(f"Graph has isolated vertices: {', '.join(labels[i] for i in isolated)}")
        logger.debug(f"Built {field.name} graph with {n} vertices and {len(self._weights)} edges")

    @staticmethod
    def _pair(i: int, j: int) -> Tuple[int, int]:
        return (i, j) if i < j else (j, i)

    def _neighbors(self, i: int) -> List[int]:
        return [j for j in range(len(self._labels)) if j != i and self._pair(i, j) in self._weights]

    # Vertices and subsets

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def size(self) -> int:
        """N = #V."""
        return len(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self._labels)) - 1

    def index_of(self, vertex: Vertex) -> int:
        """
        Resolve a vertex label or index.

        Raises:
            UnknownVertexError: If the vertex is not in the graph
        """
        if isinstance(vertex, int) and not isinstance(vertex, bool):
            if 0 <= vertex < len(self._labels):
                return vertex
            raise UnknownVertexError(f"Vertex index {vertex} out of range")
        if vertex in self._index:
            return self._index[vertex]
        raise UnknownVertexError(f"Unknown vertex {vertex!r}")

    def subset(self, vertices: Union[VertexSubset, Iterable[Vertex]]) -> VertexSubset:
        """Build a VertexSubset from labels or indices."""
        if isinstance(vertices, VertexSubset):
            if vertices.mask & ~self.full_mask:
                raise UnknownVertexError(f"Subset mask {vertices.mask:#x} exceeds the vertex set")
            return vertices
        return VertexSubset(mask_from_indices(self.index_of(v) for v in vertices))

    def subset_labels(self, subset: VertexSubset) -> List[str]:
        return [self._labels[i] for i in subset.indices()]

    # Weights

    @property
    def edge_count(self) -> int:
        return len(self._weights)

    def edges(self) -> List[Tuple[int, int, FieldElement]]:
        """Edges (i, j, b(i, j)) with i < j, in index order."""
        return [(i, j, w) for (i, j), w in sorted(self._weights.items())]

    def weight(self, x: Vertex, y: Vertex) -> FieldElement:
        """b(x, y); zero for non-adjacent pairs and for x = y."""
        return self._adjacency[self.index_of(x)][self.index_of(y)]

    def adjacent(self, x: Vertex, y: Vertex) -> bool:
        """x ~ y."""
        return self._pair(self.index_of(x), self.index_of(y)) in self._weights

    def neighbors(self, x: Vertex) -> List[int]:
        return self._neighbors(self.index_of(x))

    def degree(self, x: Vertex) -> FieldElement:
        """b(x) = sum over y of b(x, y); zero for an isolated vertex."""
        return self._degrees[self.index_of(x)]

    def degrees(self) -> Tuple[FieldElement, ...]:
        return self._degrees

    def adjacency_row(self, x: Vertex) -> List[FieldElement]:
        return list(self._adjacency[self.index_of(x)])

    def set_weight(self, subset: Union[VertexSubset, Iterable[Vertex]]) -> FieldElement:
        """b(A) = sum of b(x) over x in A."""
        subset = self.subset(subset)
        return self.field.sum(self._degrees[i] for i in subset.indices())

    def cut_weight(self, first: Union[VertexSubset, Iterable[Vertex]],
                   second: Union[VertexSubset, Iterable[Vertex]]) -> FieldElement:
        """
        b(A, B) = total weight of edges between A and B.

        Raises:
            OverlappingSubsetsError: If A and B intersect
        """
        first, second = self.subset(first), self.subset(second)
        if not first.isdisjoint(second):
            raise OverlappingSubsetsError(
                f"Subsets {self.subset_labels(first)} and {self.subset_labels(second)} intersect"
            )
        second_indices = second.indices()
        return self.field.sum(self._adjacency[i][j] for i in first.indices() for j in second_indices
                              if self._pair(i, j) in self._weights)

    def internal_weight(self, subset: Union[VertexSubset, Iterable[Vertex]]) -> FieldElement:
        """Total weight of edges with both endpoints in the subset."""
        subset = self.subset(subset)
        return self.field.sum(w for (i, j), w in self._weights.items() if i in subset and j in subset)

    def normalized_weight(self, x: Vertex, y: Vertex) -> FieldElement:
        """
        p(x, y) = b(x, y) / b(x).

        Raises:
            IsolatedVertexError: If x is isolated
        """
        i, j = self.index_of(x), self.index_of(y)
        if i in self.isolated_vertices():
            raise IsolatedVertexError(f"p({self._labels[i]}, .) is undefined: vertex is isolated")
        return self.field.div(self._adjacency[i][j], self._degrees[i])

    # Structure

    def isolated_vertices(self) -> List[int]:
        return [i for i in range(len(self._labels)) if not self._neighbors(i)]

    def require_no_isolated_vertices(self) -> None:
        """
        Raises:
            IsolatedVertexError: If some vertex has no incident edge
        """
        isolated = self.isolated_vertices()
        if isolated:
            names = ', '.join(self._labels[i] for i in isolated)
            raise IsolatedVertexError(f"Graph has isolated vertices: {names}")

    def to_networkx(self) -> nx.Graph:
        """Unweighted networkx view on vertex indices, with labels as node attributes."""
        graph = nx.Graph()
        for i, label in enumerate(self._labels):
            graph.add_node(i, label=label)
        graph.add_edges_from(self._weights.keys())
        return graph

    def connected_components(self) -> List[VertexSubset]:
        """Partition of V into path-connected classes, ordered by smallest index."""
        components = [VertexSubset(mask_from_indices(c))
                      for c in nx.connected_components(self.to_networkx())]
        return sorted(components, key=lambda c: c.indices()[0])

    def is_connected(self) -> bool:
        return len(self._labels) > 0 and len(self.connected_components()) == 1

    def is_bipartite(self) -> Tuple[bool, Optional[Tuple[VertexSubset, VertexSubset]]]:
        """
        Two-colour the graph.

        Returns:
            (True, (V1, V2)) with the smallest index of every component in V1,
            or (False, None) if some component has an odd cycle
        """
        graph = self.to_networkx()
        try:
            colouring = nx.bipartite.color(graph)
        except nx.NetworkXError:
            return False, None
        first = 0
        for component in nx.connected_components(graph):
            anchor = min(component)
            for i in component:
                if colouring[i] == colouring[anchor]:
                    first |= 1 << i
        return True, (VertexSubset(first), VertexSubset(self.full_mask & ~first))

    def is_complete(self) -> bool:
        """x ~ y for every pair of distinct vertices."""
        n = len(self._labels)
        return len(self._weights) == n * (n - 1) // 2

    def subgraph(self, vertices: Union[VertexSubset, Iterable[Vertex]]) -> 'OFGraph':
        """The graph (U, b restricted to U x U)."""
        subset = self.subset(vertices)
        keep = subset.indices()
        return OFGraph([self._labels[i] for i in keep],
                       [(self._labels[i], self._labels[j], w) for (i, j), w in sorted(self._weights.items())
                        if i in subset and j in subset],
                       self.field)

    def scaled(self, factor: FieldElement) -> 'OFGraph':
        """
        Multiply every weight by a positive constant.

        Raises:
            ValidationError: If the factor is not positive
        """
        self.field.check(factor)
        if not _is_positive(self.field, factor):
            raise ValidationError(f"Scaling factor {self.field.format(factor)} is not positive")
        return OFGraph(self._labels,
                       [(i, j, w * factor) for (i, j), w in sorted(self._weights.items())],
                       self.field)

    def with_field(self, field: OrderedField, convert) -> 'OFGraph':
        """Same graph with every weight mapped through ``convert`` into another field."""
        return OFGraph(self._labels,
                       [(i, j, convert(w)) for (i, j), w in sorted(self._weights.items())],
                       field)

    def __repr__(self) -> str:
        return f"OFGraph(N={self.size}, edges={self.edge_count}, field={self.field.name})"
