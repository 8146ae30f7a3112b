"""
Graphs over ordered fields.

This module provides the OF-graph model with the set-weight functions
b(x), b(A), b(A, B), the normalized weight p(x, y), and structural
queries (components, bipartiteness, completeness).
"""

from dualcheeger.graph.ofgraph import OFGraph, Vertex, VertexSubset

__all__ = ['OFGraph', 'Vertex', 'VertexSubset']
