"""
Characteristic and minimal polynomials, computed exactly.

The characteristic polynomial uses the Faddeev–LeVerrier trace recursion;
the minimal polynomial comes from the first linear dependency among the
vectorized powers I, M, M², ... (a Krylov argument that needs no roots).
"""

import logging
from fractions import Fraction

from shiftcert.algebra.elimination import rank_exact, row_reduce
from shiftcert.algebra.matrix import RationalMatrix
from shiftcert.algebra.polynomial import Polynomial

logger = logging.getLogger(__name__)


def char_poly(matrix: RationalMatrix) -> Polynomial:
    """
    det(λI − M) as a monic polynomial of degree n.

    Args:
        matrix: Square rational matrix

    Returns:
        Polynomial: The characteristic polynomial, ascending coefficients
    """
    n = matrix.n
    identity = RationalMatrix.identity(n)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    accumulator = RationalMatrix.zeros(n)
    for k in range(1, n + 1):
        accumulator = matrix @ accumulator + identity * coeffs[n - k + 1]
        coeffs[n - k] = -(matrix @ accumulator).trace() / k
    return Polynomial(coeffs)


def _vectorized_powers(matrix: RationalMatrix, count: int) -> list[list[Fraction]]:
    """Rows of the n²×count Krylov matrix [vec(M⁰) ... vec(M^(count-1))]."""
    columns = [power.vec() for power in matrix.powers(count)]
    return [list(entries) for entries in zip(*columns)]


def min_poly(matrix: RationalMatrix) -> Polynomial:
    """
    Monic minimal polynomial of M.

    Stacks vec(M⁰), ..., vec(Mⁿ) as columns and row-reduces once: the first
    non-pivot column k is the lowest power dependent on its predecessors, and
    its RREF column holds the combination coefficients.

    Args:
        matrix: Square rational matrix

    Returns:
        Polynomial: The minimal polynomial (degree between 1 and n)
    """
    n = matrix.n
    echelon = row_reduce(_vectorized_powers(matrix, n + 1))
    pivots = echelon.pivots
    degree = next((k for k in range(n + 1) if k >= len(pivots) or pivots[k] != k), n)
    coeffs = [Fraction(0)] * (degree + 1)
    coeffs[degree] = Fraction(1)
    for row_index in range(degree):
        coeffs[pivots[row_index]] = -echelon.rows[row_index][degree]
    result = Polynomial(coeffs)
    logger.debug(f"Minimal polynomial of {n}x{n} matrix has degree {result.degree}")
    return result


def krylov_rank(matrix: RationalMatrix) -> int:
    """Rank of the stacked vectorized powers M⁰..M^(n−1)."""
    return rank_exact(_vectorized_powers(matrix, matrix.n))


def eval_matrix_poly(h: Polynomial, matrix: RationalMatrix) -> RationalMatrix:
    """
    h(M) = h₀I + h₁M + ... + h_d M^d, exactly, in Horner form.

    The zero polynomial evaluates to the zero matrix.
    """
    n = matrix.n
    identity = RationalMatrix.identity(n)
    result = RationalMatrix.zeros(n)
    for c in reversed(h.coeffs):
        result = result @ matrix + identity * c
    return result
