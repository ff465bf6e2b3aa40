"""
Existence and impossibility of shift-enabled matrices with a fixed sparsity pattern.
"""

from shiftcert.patterns.certificates import (
    CertificateKind,
    ImpossibilityCertificate,
    PowerEqualityDetails,
    RankDeficiencyDetails,
    certify_power_equality,
    certify_rank_deficiency,
    random_weightings,
    replay_certificate,
    structural_rank,
)
from shiftcert.patterns.commutant import CommutantFamily, commutant_with_pattern
from shiftcert.patterns.laplacian import LaplacianAnalysis, laplacian_variant
from shiftcert.patterns.search import (
    SearchOutcome,
    SearchStatus,
    TrialRecord,
    exists_shift_enabled_with_pattern,
)

__all__ = [
    'CertificateKind',
    'ImpossibilityCertificate',
    'PowerEqualityDetails',
    'RankDeficiencyDetails',
    'certify_power_equality',
    'certify_rank_deficiency',
    'random_weightings',
    'replay_certificate',
    'structural_rank',
    'CommutantFamily',
    'commutant_with_pattern',
    'LaplacianAnalysis',
    'laplacian_variant',
    'SearchOutcome',
    'SearchStatus',
    'TrialRecord',
    'exists_shift_enabled_with_pattern',
]
