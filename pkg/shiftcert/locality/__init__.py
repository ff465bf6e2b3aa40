"""
Local (neighbor-exchange) evaluation of polynomial graph filters.
"""

from shiftcert.locality.filtering import (
    GraphSignal,
    LocalityComparison,
    LocalityReport,
    apply_filter_locally,
    compare_locality,
    matrix_density,
    shift_signal,
)

__all__ = [
    'GraphSignal',
    'LocalityComparison',
    'LocalityReport',
    'apply_filter_locally',
    'compare_locality',
    'matrix_density',
    'shift_signal',
]
