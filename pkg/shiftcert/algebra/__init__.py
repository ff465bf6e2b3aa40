"""
Exact rational linear algebra and the characteristic/minimal polynomials.
"""

from shiftcert.algebra.elimination import (
    RowEchelon,
    SolveResult,
    integer_normalize,
    left_nullspace_exact,
    nullspace_exact,
    rank_exact,
    row_reduce,
    solve_exact,
)
from shiftcert.algebra.matrix import RationalMatrix, parse_rational
from shiftcert.algebra.minimal import char_poly, eval_matrix_poly, krylov_rank, min_poly
from shiftcert.algebra.polynomial import Polynomial, brackets_root, poly_divides, rational_roots

__all__ = [
    'Polynomial',
    'RationalMatrix',
    'RowEchelon',
    'SolveResult',
    'brackets_root',
    'char_poly',
    'eval_matrix_poly',
    'integer_normalize',
    'krylov_rank',
    'left_nullspace_exact',
    'min_poly',
    'nullspace_exact',
    'parse_rational',
    'poly_divides',
    'rank_exact',
    'rational_roots',
    'row_reduce',
    'solve_exact',
]
