"""
Exact Gaussian elimination over the rationals.

Pivoting is deterministic: for each column, the first row (at or below the
current pivot row) holding a nonzero entry becomes the pivot. Every routine
accepts either a RationalMatrix or a rectangular sequence of rows.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from shiftcert.algebra.matrix import RationalMatrix, _as_fraction
from shiftcert.errors import DimensionMismatchError

Rows = Sequence[Sequence[Fraction]]
MatrixLike = Union[RationalMatrix, Rows]


def _to_rows(matrix: MatrixLike) -> list[list[Fraction]]:
    if isinstance(matrix, RationalMatrix):
        return [list(row) for row in matrix.rows]
    rows = [[_as_fraction(value) for value in row] for row in matrix]
    if rows:
        width = len(rows[0])
        for index, row in enumerate(rows):
            if len(row) != width:
                raise DimensionMismatchError(
                    f"Ragged system: row {index + 1} has {len(row)} entries, expected {width}"
                )
    return rows


def _column_count(rows: list[list[Fraction]], default: int = 0) -> int:
    return len(rows[0]) if rows else default


@dataclass(frozen=True)
class RowEchelon:
    """Reduced row echelon form with its pivot columns."""

    rows: list[list[Fraction]]
    pivots: list[int]
    columns: int

    @property
    def rank(self) -> int:
        return len(self.pivots)


@dataclass(frozen=True)
class SolveResult:
    """
    Outcome of an exact linear solve A·x = b.

    When consistent, ``solution`` is the particular solution with free
    variables at zero and ``homogeneous`` spans the nullspace of A. When
    inconsistent, ``certificate`` is a vector y with yᵀA = 0 and yᵀb ≠ 0.
    """

    consistent: bool
    solution: Optional[list[Fraction]] = None
    homogeneous: list[list[Fraction]] = field(default_factory=list)
    certificate: Optional[list[Fraction]] = None


def row_reduce(matrix: MatrixLike, columns: Optional[int] = None) -> RowEchelon:
    """
    Reduce to RREF.

    Args:
        matrix: Rows to reduce (not modified)
        columns: Only pivot within the first ``columns`` columns (the rest are
            carried along, e.g. an augmented right-hand side)

    Returns:
        RowEchelon: Reduced rows and pivot column indices
    """
    rows = _to_rows(matrix)
    width = _column_count(rows)
    limit = width if columns is None else columns
    pivots: list[int] = []
    pivot_row = 0
    for column in range(limit):
        if pivot_row >= len(rows):
            break
        selected = next(
            (r for r in range(pivot_row, len(rows)) if rows[r][column] != 0), None
        )
        if selected is None:
            continue
        rows[pivot_row], rows[selected] = rows[selected], rows[pivot_row]
        pivot = rows[pivot_row][column]
        if pivot != 1:
            rows[pivot_row] = [value / pivot for value in rows[pivot_row]]
        base = rows[pivot_row]
        for r in range(len(rows)):
            if r == pivot_row:
                continue
            factor = rows[r][column]
            if factor == 0:
                continue
            rows[r] = [a - factor * b for a, b in zip(rows[r], base)]
        pivots.append(column)
        pivot_row += 1
    return RowEchelon(rows=rows, pivots=pivots, columns=width)


def rank_exact(matrix: MatrixLike) -> int:
    """Exact rank."""
    return row_reduce(matrix).rank


def nullspace_exact(matrix: MatrixLike, columns: Optional[int] = None) -> list[list[Fraction]]:
    """
    Exact nullspace basis, one vector per free column (free entry set to 1).

    Args:
        matrix: Coefficient rows
        columns: Number of unknowns when ``matrix`` has no rows

    Returns:
        list: Basis vectors in increasing free-column order
    """
    echelon = row_reduce(matrix)
    width = echelon.columns or (columns or 0)
    pivot_set = set(echelon.pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * width
        vector[free] = Fraction(1)
        for row_index, pivot in enumerate(echelon.pivots):
            vector[pivot] = -echelon.rows[row_index][free]
        basis.append(vector)
    return basis


def left_nullspace_exact(matrix: MatrixLike) -> list[list[Fraction]]:
    """Basis of {y : yᵀA = 0}."""
    rows = _to_rows(matrix)
    if not rows:
        return []
    transposed = [list(column) for column in zip(*rows)]
    if not transposed:
        return [
            [Fraction(1) if i == j else Fraction(0) for j in range(len(rows))]
            for i in range(len(rows))
        ]
    return nullspace_exact(transposed)


def integer_normalize(vector: Sequence[Fraction]) -> list[Fraction]:
    """Scale to coprime integers with a positive first nonzero entry."""
    nonzero = [value for value in vector if value != 0]
    if not nonzero:
        return list(vector)
    scale = math.lcm(*(value.denominator for value in nonzero))
    ints = [int(value * scale) for value in vector]
    content = math.gcd(*ints)
    if nonzero[0] < 0:
        content = -content
    return [Fraction(value // content) for value in ints]


def solve_exact(a: MatrixLike, b: Sequence[Fraction]) -> SolveResult:
    """
    Decide A·x = b exactly.

    Args:
        a: m×k coefficient rows
        b: Right-hand side of length m

    Returns:
        SolveResult: General solution, or an inconsistency certificate

    Raises:
        DimensionMismatchError: If len(b) differs from the number of rows
    """
    rows = _to_rows(a)
    rhs = [_as_fraction(value) for value in b]
    if len(rhs) != len(rows):
        raise DimensionMismatchError(
            f"Right-hand side has {len(rhs)} entries for {len(rows)} equations"
        )
    unknowns = _column_count(rows)
    augmented = [row + [value] for row, value in zip(rows, rhs)]
    echelon = row_reduce(augmented, columns=unknowns)

    inconsistent = any(
        row[unknowns] != 0 for row in echelon.rows[echelon.rank:]
    )
    if inconsistent:
        certificate = None
        for y in left_nullspace_exact(rows):
            if sum((yi * bi for yi, bi in zip(y, rhs)), Fraction(0)) != 0:
                certificate = integer_normalize(y)
                break
        return SolveResult(consistent=False, certificate=certificate)

    solution = [Fraction(0)] * unknowns
    for row_index, pivot in enumerate(echelon.pivots):
        solution[pivot] = echelon.rows[row_index][unknowns]
    homogeneous = nullspace_exact(rows, columns=unknowns) if unknowns else []
    return SolveResult(consistent=True, solution=solution, homogeneous=homogeneous)
