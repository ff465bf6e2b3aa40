"""
shiftcert: shift-enabled graph shift matrices and polynomial graph filters.

Exact rational arithmetic decides whether a shift is shift-enabled and
whether a filter is a polynomial in it; floating spectral tools convert
non-shift-enabled shifts and audit the result; pattern search either finds
a shift-enabled matrix with a given sparsity pattern or certifies that none
exists.
"""

__version__ = "0.1.0"

from shiftcert.algebra import Polynomial, RationalMatrix, char_poly, min_poly
from shiftcert.analysis import (
    commutes,
    construct_nonrepresentable_filter,
    is_shift_enabled,
    represent_as_polynomial,
)
from shiftcert.config import ToleranceConfig, get_tolerance_config
from shiftcert.conversion import PatternMode, PerturbationPolicy, SparsityPattern, convert_to_shift_enabled
from shiftcert.errors import ShiftCertError
from shiftcert.locality import apply_filter_locally
from shiftcert.patterns import exists_shift_enabled_with_pattern, laplacian_variant, replay_certificate
from shiftcert.spectral import joint_diagonalizer, symm_eig

__all__ = [
    '__version__',
    'Polynomial',
    'RationalMatrix',
    'char_poly',
    'min_poly',
    'commutes',
    'construct_nonrepresentable_filter',
    'is_shift_enabled',
    'represent_as_polynomial',
    'ToleranceConfig',
    'get_tolerance_config',
    'PatternMode',
    'PerturbationPolicy',
    'SparsityPattern',
    'convert_to_shift_enabled',
    'ShiftCertError',
    'apply_filter_locally',
    'exists_shift_enabled_with_pattern',
    'laplacian_variant',
    'replay_certificate',
    'joint_diagonalizer',
    'symm_eig',
]
