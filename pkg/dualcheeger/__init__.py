"""
dualcheeger - Dual Cheeger constant and Laplacian spectra over ordered fields

This library computes and certifies the dual Cheeger constant and the
normalized Laplacian spectrum of finite weighted graphs whose weights come
from an ordered field: exact rationals, floats, or the truncated
Levi-Civita field of series in an infinitesimal e.

Main components:
- Ordered-field backends and the weight-expression syntax
- Graphs over ordered fields
- Laplacian, characteristic polynomial and eigenvalues
- Exhaustive dual Cheeger computation and inequality certification
"""

__version__ = '0.1.0'

# For more convenient imports
from dualcheeger.fields import LeviCivitaField, LeviCivitaNumber, RationalField, RealField, make_field
from dualcheeger.graph import OFGraph
from dualcheeger.parsing import dump_graph, parse_graph
from dualcheeger.spectral import build_laplacian, eigenvalues
from dualcheeger.cheeger import certify, dual_cheeger

__all__ = [
    'LeviCivitaField', 'LeviCivitaNumber', 'RationalField', 'RealField', 'make_field',
    'OFGraph', 'dump_graph', 'parse_graph', 'build_laplacian', 'eigenvalues',
    'certify', 'dual_cheeger',
]
