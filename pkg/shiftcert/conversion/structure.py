"""
Sparsity patterns and the strict/loose same-graph relation.

Two matrices strictly describe the same graph when their nonzero supports
agree at every position; loosely when they agree off the diagonal. Both
relations also require the two matrices to agree on being symmetric.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence, Union

import numpy as np

from shiftcert.algebra.matrix import RationalMatrix, Scalar
from shiftcert.config import DEFAULT_ZERO_TOL
from shiftcert.errors import DimensionMismatchError

MatrixInput = Union[RationalMatrix, np.ndarray]


class PatternMode(str, Enum):
    """How the diagonal is treated when comparing supports."""

    STRICT = "strict"
    LOOSE = "loose"


def _as_array(matrix: MatrixInput) -> np.ndarray:
    if isinstance(matrix, RationalMatrix):
        return matrix.to_numpy()
    array = np.asarray(matrix, dtype=np.float64)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise DimensionMismatchError(f"Expected a square matrix, got shape {array.shape}")
    return array


def _support(matrix: MatrixInput, zero_tol: float) -> np.ndarray:
    """Boolean mask of nonzero entries; rational entries are tested exactly."""
    if isinstance(matrix, RationalMatrix):
        return np.array([[value != 0 for value in row] for row in matrix.rows], dtype=bool)
    return np.abs(_as_array(matrix)) > zero_tol


def _is_symmetric(matrix: MatrixInput, zero_tol: float) -> bool:
    if isinstance(matrix, RationalMatrix):
        return matrix.is_symmetric()
    array = _as_array(matrix)
    return bool(np.max(np.abs(array - array.T)) <= zero_tol)


@dataclass(frozen=True)
class SparsityPattern:
    """
    Symmetric off-diagonal support plus a diagonal policy.

    Attributes:
        n: Number of nodes
        offdiag_support: 0-based pairs (i, j) with i < j
        mode: STRICT keeps ``diagonal_support``; LOOSE leaves the diagonal free
        diagonal_support: Nonzero diagonal positions (used in STRICT mode)
    """

    n: int
    offdiag_support: frozenset[tuple[int, int]]
    mode: PatternMode = PatternMode.STRICT
    diagonal_support: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        for i, j in self.offdiag_support:
            if not 0 <= i < j < self.n:
                raise DimensionMismatchError(f"Pattern pair ({i}, {j}) is not an upper-triangle pair of a {self.n}-node graph")
        for i in self.diagonal_support:
            if not 0 <= i < self.n:
                raise DimensionMismatchError(f"Diagonal position {i} outside a {self.n}-node graph")

    @classmethod
    def from_matrix(
        cls,
        matrix: MatrixInput,
        mode: PatternMode = PatternMode.STRICT,
        zero_tol: float = DEFAULT_ZERO_TOL,
    ) -> "SparsityPattern":
        """Pattern of a matrix; an off-diagonal pair is present if either (i,j) or (j,i) is nonzero."""
        support = _support(matrix, zero_tol)
        n = support.shape[0]
        pairs = frozenset(
            (i, j) for i in range(n) for j in range(i + 1, n) if support[i, j] or support[j, i]
        )
        diagonal = frozenset(i for i in range(n) if support[i, i])
        return cls(n=n, offdiag_support=pairs, mode=PatternMode(mode), diagonal_support=diagonal)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        mode: PatternMode = PatternMode.STRICT,
    ) -> "SparsityPattern":
        """Pattern from 0-based undirected edges; self loops go to the diagonal support."""
        pairs, diagonal = set(), set()
        for i, j in edges:
            if i == j:
                diagonal.add(i)
            else:
                pairs.add((min(i, j), max(i, j)))
        return cls(n=n, offdiag_support=frozenset(pairs), mode=PatternMode(mode), diagonal_support=frozenset(diagonal))

    def with_mode(self, mode: PatternMode) -> "SparsityPattern":
        return SparsityPattern(self.n, self.offdiag_support, PatternMode(mode), self.diagonal_support)

    def free_entries(self) -> list[tuple[int, int]]:
        """
        Upper-triangle positions a pattern-respecting symmetric matrix may fill.

        Row-major order. Diagonal positions are all free in LOOSE mode and
        limited to ``diagonal_support`` in STRICT mode.
        """
        entries = []
        for i in range(self.n):
            for j in range(i, self.n):
                if i == j:
                    if self.mode is PatternMode.LOOSE or i in self.diagonal_support:
                        entries.append((i, i))
                elif (i, j) in self.offdiag_support:
                    entries.append((i, j))
        return entries

    def matrix_from_coordinates(self, coordinates: Sequence[Scalar]) -> RationalMatrix:
        """Symmetric matrix with ``coordinates`` placed on free_entries() in order."""
        entries = self.free_entries()
        if len(coordinates) != len(entries):
            raise DimensionMismatchError(
                f"Pattern has {len(entries)} free entries, got {len(coordinates)} coordinates"
            )
        rows: list[list[Scalar]] = [[0] * self.n for _ in range(self.n)]
        for (i, j), value in zip(entries, coordinates):
            rows[i][j] = value
            rows[j][i] = value
        return RationalMatrix(rows, symmetric=True)

    def is_realized_by(self, matrix: MatrixInput, zero_tol: float = DEFAULT_ZERO_TOL) -> bool:
        """True iff the matrix is symmetric with exactly this support (diagonal per mode)."""
        support = _support(matrix, zero_tol)
        if support.shape != (self.n, self.n) or not _is_symmetric(matrix, zero_tol):
            return False
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if bool(support[i, j]) != ((i, j) in self.offdiag_support):
                    return False
        if self.mode is PatternMode.STRICT:
            return all(bool(support[i, i]) == (i in self.diagonal_support) for i in range(self.n))
        return True

    def mask(self) -> np.ndarray:
        """Boolean n×n support mask (diagonal included only in STRICT mode)."""
        result = np.zeros((self.n, self.n), dtype=bool)
        for i, j in self.offdiag_support:
            result[i, j] = result[j, i] = True
        if self.mode is PatternMode.STRICT:
            for i in self.diagonal_support:
                result[i, i] = True
        else:
            np.fill_diagonal(result, True)
        return result


def describes_same_graph(
    A: MatrixInput,
    B: MatrixInput,
    mode: PatternMode = PatternMode.STRICT,
    zero_tol: float = DEFAULT_ZERO_TOL,
) -> bool:
    """
    Strict or loose same-graph relation between two matrices.

    Rational entries are compared with zero exactly; floating entries count
    as nonzero when |·| > zero_tol.

    Raises:
        DimensionMismatchError: If A and B differ in size
    """
    support_a = _support(A, zero_tol)
    support_b = _support(B, zero_tol)
    if support_a.shape != support_b.shape:
        raise DimensionMismatchError(f"Dimension mismatch: {support_a.shape} vs {support_b.shape}")
    if _is_symmetric(A, zero_tol) != _is_symmetric(B, zero_tol):
        return False
    agree = support_a == support_b
    if PatternMode(mode) is PatternMode.LOOSE:
        np.fill_diagonal(agree, True)
    return bool(np.all(agree))
