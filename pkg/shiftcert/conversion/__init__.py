"""
Shift-matrix conversion by eigenvalue perturbation and its structural audit.
"""

from shiftcert.conversion.convert import (
    DEFAULT_POLICY_SET,
    ConversionOutcome,
    PerturbationPolicy,
    RecoveryResult,
    convert_to_shift_enabled,
    eval_float_matrix_poly,
    recover_original,
)
from shiftcert.conversion.structure import PatternMode, SparsityPattern, describes_same_graph

__all__ = [
    'DEFAULT_POLICY_SET',
    'ConversionOutcome',
    'PerturbationPolicy',
    'RecoveryResult',
    'convert_to_shift_enabled',
    'eval_float_matrix_poly',
    'recover_original',
    'PatternMode',
    'SparsityPattern',
    'describes_same_graph',
]
