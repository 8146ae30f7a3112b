"""
Normalized Laplacian and its spectrum.

This module provides functions on the vertex set, the Laplacian matrix,
the weighted scalar product and Green formula, characteristic
polynomials, and eigenvalue computation for every field backend.
"""

from dualcheeger.spectral.laplacian import (
    FunctionOnV,
    LaplacianMatrix,
    apply_laplacian,
    build_laplacian,
    green_form,
    inner_product,
    rayleigh_quotient,
    standard_part_matrix,
)
from dualcheeger.spectral.polynomial import (
    Polynomial,
    char_poly,
    polynomial_gcd,
    squarefree_decomposition,
    squarefree_part,
)
from dualcheeger.spectral.eigensolver import cluster_values, jacobi_eigenvalues, jacobi_eigh
from dualcheeger.spectral.lifting import newton_lift
from dualcheeger.spectral.spectrum import (
    Eigenvalue,
    EigenvalueStatus,
    Spectrum,
    eigenvalues,
    verify_eigenpair,
)

__all__ = [
    'FunctionOnV', 'LaplacianMatrix', 'apply_laplacian', 'build_laplacian', 'green_form',
    'inner_product', 'rayleigh_quotient', 'standard_part_matrix',
    'Polynomial', 'char_poly', 'polynomial_gcd', 'squarefree_decomposition', 'squarefree_part',
    'cluster_values', 'jacobi_eigenvalues', 'jacobi_eigh', 'newton_lift',
    'Eigenvalue', 'EigenvalueStatus', 'Spectrum', 'eigenvalues', 'verify_eigenpair',
]
