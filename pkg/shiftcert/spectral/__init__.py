"""
Floating-point spectral layer: Jacobi eigendecomposition and joint diagonalization.
"""

from shiftcert.spectral.jacobi import (
    SpectralDecomposition,
    as_float_symmetric,
    eigenvalue_clusters,
    has_distinct_eigenvalues,
    jacobi_eigh,
    normalize_signs,
    require_orthonormal,
    symm_eig,
)
from shiftcert.spectral.joint import (
    JointDiagonalization,
    floating_commutes,
    joint_diagonalize,
    joint_diagonalizer,
    relative_commutator,
)

__all__ = [
    'SpectralDecomposition',
    'as_float_symmetric',
    'eigenvalue_clusters',
    'has_distinct_eigenvalues',
    'jacobi_eigh',
    'normalize_signs',
    'require_orthonormal',
    'symm_eig',
    'JointDiagonalization',
    'floating_commutes',
    'joint_diagonalize',
    'joint_diagonalizer',
    'relative_commutator',
]
