"""
Dual Cheeger constant and its certification.

This module provides the exhaustive computation of h with a witness
pair, the lower bound by parity, the expansion h(f) of a positive set
with the two-sided bound on W, and the verdicts for every inequality
relating h to the largest Laplacian eigenvalue.
"""

from dualcheeger.cheeger.verdicts import InequalityVerdict, Verdict, check_relation, overall
from dualcheeger.cheeger.dual import (
    CheegerCertificate,
    SubsetTables,
    balanced_partition_maximum,
    dual_cheeger,
    parity_lower_bound,
)
from dualcheeger.cheeger.expansion import RayleighBoundResult, h_of_f, positive_part_bound_check, minimize_expansion
from dualcheeger.cheeger.certify import (
    EXPECTATION_KEYS,
    certify,
    expectation_verdicts,
    inequality_verdicts,
    upper_spectral_bound,
)

__all__ = [
    'InequalityVerdict', 'Verdict', 'check_relation', 'overall',
    'CheegerCertificate', 'SubsetTables', 'balanced_partition_maximum', 'dual_cheeger', 'parity_lower_bound',
    'RayleighBoundResult', 'h_of_f', 'positive_part_bound_check', 'minimize_expansion',
    'EXPECTATION_KEYS', 'certify', 'expectation_verdicts', 'inequality_verdicts', 'upper_spectral_bound',
]
