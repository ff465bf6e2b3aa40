"""
Shift-enabled decision, shift invariance and polynomial representability.
"""

from shiftcert.analysis.filters import (
    ConstructedFilter,
    construct_nonrepresentable_filter,
    filter_family_member,
)
from shiftcert.analysis.invariance import (
    RepresentabilityResult,
    commutes,
    find_witness_pair,
    pair_separates,
    represent_as_polynomial,
)
from shiftcert.analysis.shift_enabled import ShiftEnabledReport, is_shift_enabled

__all__ = [
    'ConstructedFilter',
    'construct_nonrepresentable_filter',
    'filter_family_member',
    'RepresentabilityResult',
    'commutes',
    'find_witness_pair',
    'pair_separates',
    'represent_as_polynomial',
    'ShiftEnabledReport',
    'is_shift_enabled',
]
