"""
Dense square matrices over the rationals.

RationalMatrix is the home of shift matrices and filters. Entries are
fractions.Fraction values backed by arbitrary-precision integers, so every
product, power and polynomial evaluation is exact.
"""

import numbers
import re
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from shiftcert.errors import DimensionMismatchError, NotSymmetricError

Scalar = Union[int, Fraction, str]

_RATIONAL_PATTERN = re.compile(r"^[+-]?\d+\s*/\s*[+-]?\d+$")


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """
    Parse an exact rational from text.

    Accepts integers ("3"), fractions ("-2/7") and finite decimals ("0.125",
    "1e-3"). Decimals go through decimal.Decimal so they are converted
    exactly rather than through a binary float.

    Args:
        text: Token to parse (ints and Fractions pass through)

    Returns:
        Fraction: The exact value

    Raises:
        ValueError: If the token is not a finite rational literal
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ValueError(f"Not a rational literal: {text!r}")
    if isinstance(text, numbers.Integral):
        return Fraction(int(text))
    if not isinstance(text, str):
        raise ValueError(f"Not a rational literal: {text!r}")

    token = text.strip()
    if _RATIONAL_PATTERN.match(token):
        numerator, denominator = (part.strip() for part in token.split("/"))
        if int(denominator) == 0:
            raise ValueError(f"Zero denominator in {text!r}")
        return Fraction(int(numerator), int(denominator))

    try:
        value = Decimal(token)
    except InvalidOperation:
        raise ValueError(f"Not a rational literal: {text!r}") from None
    if not value.is_finite():
        raise ValueError(f"Not a finite rational literal: {text!r}")
    return Fraction(value)


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        # Floats are only accepted when they are integral; anything else would
        # smuggle binary rounding into an exact matrix.
        if not value.is_integer():
            raise TypeError(f"Refusing inexact float entry {value!r}; use parse_rational")
        return Fraction(int(value))
    return parse_rational(value)


class RationalMatrix:
    """
    Immutable n×n matrix with exact rational entries.

    The optional ``symmetric`` flag asserts symmetry and is checked at
    construction time.
    """

    __slots__ = ("_rows", "_n", "_hash")

    def __init__(self, rows: Iterable[Iterable[Scalar]], symmetric: bool = False):
        """
        Build a matrix from row-major entries.

        Args:
            rows: n rows of n entries each (ints, Fractions or rational strings)
            symmetric: Assert that the matrix equals its transpose

        Raises:
            DimensionMismatchError: If the matrix is empty or not square
            NotSymmetricError: If ``symmetric`` is set and the entries disagree
        """
        frozen = tuple(tuple(_as_fraction(value) for value in row) for row in rows)
        n = len(frozen)
        if n == 0:
            raise DimensionMismatchError("Matrix must have at least one row")
        for index, row in enumerate(frozen):
            if len(row) != n:
                raise DimensionMismatchError(
                    f"Matrix is not square: row {index + 1} has {len(row)} entries, expected {n}"
                )
        self._rows = frozen
        self._n = n
        self._hash = None
        if symmetric and not self.is_symmetric():
            raise NotSymmetricError("Matrix flagged symmetric has M[i][j] != M[j][i]")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Scalar]], symmetric: bool = False) -> "RationalMatrix":
        return cls(rows, symmetric=symmetric)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "RationalMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> "RationalMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_vec(cls, values: Sequence[Fraction], n: int) -> "RationalMatrix":
        """Inverse of vec(): rebuild an n×n matrix from its row-major vector."""
        if len(values) != n * n:
            raise DimensionMismatchError(f"Vector of length {len(values)} is not {n}x{n}")
        return cls([values[i * n:(i + 1) * n] for i in range(n)])

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self._rows[i][j]

    def __iter__(self) -> Iterator[tuple[Fraction, ...]]:
        return iter(self._rows)

    def vec(self) -> list[Fraction]:
        """Row-major vectorization."""
        return [value for row in self._rows for value in row]

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(value) for value in row] for row in self._rows], dtype=np.float64)

    def trace(self) -> Fraction:
        return sum((self._rows[i][i] for i in range(self._n)), Fraction(0))

    def is_symmetric(self) -> bool:
        rows = self._rows
        return all(
            rows[i][j] == rows[j][i] for i in range(self._n) for j in range(i + 1, self._n)
        )

    def is_zero(self) -> bool:
        return all(value == 0 for row in self._rows for value in row)

    def nonzero_count(self) -> int:
        return sum(1 for row in self._rows for value in row if value != 0)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self._rows))

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _check_same_size(self, other: "RationalMatrix") -> None:
        if not isinstance(other, RationalMatrix):
            raise TypeError(f"Expected RationalMatrix, got {type(other).__name__}")
        if other._n != self._n:
            raise DimensionMismatchError(f"Dimension mismatch: {self._n} vs {other._n}")

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_size(other)
        return RationalMatrix(
            [a + b for a, b in zip(row_a, row_b)] for row_a, row_b in zip(self._rows, other._rows)
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_size(other)
        return RationalMatrix(
            [a - b for a, b in zip(row_a, row_b)] for row_a, row_b in zip(self._rows, other._rows)
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix([-value for value in row] for row in self._rows)

    def __mul__(self, scalar: Scalar) -> "RationalMatrix":
        if isinstance(scalar, RationalMatrix):
            raise TypeError("Use @ for matrix products")
        factor = _as_fraction(scalar)
        return RationalMatrix([factor * value for value in row] for row in self._rows)

    __rmul__ = __mul__

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_size(other)
        columns = list(zip(*other._rows))
        return RationalMatrix(
            [sum((a * b for a, b in zip(row, column)), Fraction(0)) for column in columns]
            for row in self._rows
        )

    def apply(self, vector: Sequence[Fraction]) -> list[Fraction]:
        """Exact matrix-vector product."""
        if len(vector) != self._n:
            raise DimensionMismatchError(
                f"Vector of length {len(vector)} does not match dimension {self._n}"
            )
        return [sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in self._rows]

    def power(self, k: int) -> "RationalMatrix":
        if k < 0:
            raise ValueError("Matrix power must be non-negative")
        result = RationalMatrix.identity(self._n)
        for _ in range(k):
            result = result @ self
        return result

    def powers(self, count: int) -> list["RationalMatrix"]:
        """[M^0, M^1, ..., M^(count-1)]."""
        result = [RationalMatrix.identity(self._n)]
        while len(result) < count:
            result.append(result[-1] @ self)
        return result[:count]

    # ------------------------------------------------------------------
    # Dunder plumbing
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(value) for value in row) for row in self._rows)
        return f"RationalMatrix([{body}])"
