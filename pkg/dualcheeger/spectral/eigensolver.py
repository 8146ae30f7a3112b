"""
Cyclic Jacobi eigensolver for small real symmetric matrices.
"""
import math
from typing import List, Tuple

import numpy as np

from dualcheeger.config import JACOBI_MAX_SWEEPS, JACOBI_THRESHOLD
from dualcheeger.exceptions import ConvergenceError, DimensionMismatchError
from dualcheeger.utils.logger import logger

def off_diagonal_norm(matrix: np.ndarray) -> float:
    """Frobenius norm of the strictly off-diagonal part."""
    return float(np.linalg.norm(matrix - np.diag(np.diag(matrix))))

def jacobi_eigh(matrix, threshold: float = JACOBI_THRESHOLD,
                max_sweeps: int = JACOBI_MAX_SWEEPS) -> Tuple[np.ndarray, np.ndarray]:
    """
    Diagonalize a symmetric matrix by cyclic Jacobi rotations.

    Args:
        matrix: Real symmetric square matrix
        threshold: Stop when the off-diagonal Frobenius norm drops below this
        max_sweeps: Maximum number of full sweeps

    Returns:
        (eigenvalues ascending, eigenvectors as columns in the same order)

    Raises:
        DimensionMismatchError: If the matrix is not square
        ConvergenceError: If the sweep limit is reached
    """
    a = np.array(matrix, dtype=float, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"Expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    vectors = np.eye(n)
    for sweep in range(max_sweeps):
        if off_diagonal_norm(a) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * a[p, q])
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                column_p, column_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * column_p - s * column_q
                a[:, q] = s * column_p + c * column_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vector_p, vector_q = vectors[:, p].copy(), vectors[:, q].copy()
                vectors[:, p] = c * vector_p - s * vector_q
                vectors[:, q] = s * vector_p + c * vector_q
    else:
        if off_diagonal_norm(a) > threshold:
            raise ConvergenceError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    logger.debug(f"Jacobi converged after {sweep} sweeps on a {n}x{n} matrix")
    values = np.diag(a)
    order = np.argsort(values, kind='stable')
    return values[order], vectors[:, order]

def jacobi_eigenvalues(matrix, threshold: float = JACOBI_THRESHOLD,
                       max_sweeps: int = JACOBI_MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a symmetric matrix, ascending."""
    return jacobi_eigh(matrix, threshold, max_sweeps)[0]

def cluster_values(values, tolerance: float) -> List[Tuple[float, int]]:
    """
    Group sorted values whose consecutive gaps are within tolerance.

    Returns:
        (mean, count) for every cluster, ascending
    """
    clusters: List[List[float]] = []
    for value in sorted(float(v) for v in values):
        if clusters and value - clusters[-1][-1] <= tolerance:
            clusters[-1].append(value)
        else:
            clusters.append([value])
    return [(sum(group) / len(group), len(group)) for group in clusters]
