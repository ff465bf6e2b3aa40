"""
Graph filtering as rounds of neighbor exchanges.

h(S)·x is evaluated by Horner's rule, one support-restricted shift per
round. Each round every node receives one message per off-diagonal nonzero
in its row, so a degree-L filter costs L rounds of (off-diagonal nnz)
messages. Dense converted shift matrices make every round all-to-all.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np
from numpy.polynomial import Polynomial as FloatPolynomial
from scipy.sparse import csr_matrix

from shiftcert.algebra.matrix import RationalMatrix, Scalar, _as_fraction
from shiftcert.algebra.polynomial import Polynomial
from shiftcert.config import DEFAULT_ZERO_TOL
from shiftcert.errors import DimensionMismatchError

logger = logging.getLogger(__name__)

ShiftInput = Union[RationalMatrix, np.ndarray]
FilterPolynomial = Union[Polynomial, FloatPolynomial]


@dataclass(frozen=True)
class GraphSignal:
    """One value per node, in shift-matrix node order; exact values are Fractions."""

    values: Union[tuple[Fraction, ...], np.ndarray]
    exact: bool

    @property
    def n(self) -> int:
        return len(self.values)

    def to_numpy(self) -> np.ndarray:
        return np.array([float(v) for v in self.values], dtype=np.float64)

    @classmethod
    def from_values(cls, values: Sequence[Scalar]) -> "GraphSignal":
        return cls(values=tuple(_as_fraction(v) for v in values), exact=True)


@dataclass(frozen=True)
class LocalityReport:
    """Exchange cost of one filtering run."""

    hops: int
    messages_per_round: int
    total_messages: int
    density: float
    converted_density: Optional[float] = None


@dataclass(frozen=True)
class LocalityComparison:
    original: LocalityReport
    converted: LocalityReport
    original_output: GraphSignal
    converted_output: GraphSignal

    @property
    def density_ratio(self) -> float:
        return self.converted.density / self.original.density if self.original.density else float("inf")


def _signal_values(x: Union[GraphSignal, Sequence], n: int) -> Sequence:
    values = x.values if isinstance(x, GraphSignal) else x
    if len(values) != n:
        raise DimensionMismatchError(f"Signal of length {len(values)} does not match {n} nodes")
    return values


def _float_support(S: np.ndarray, zero_tol: float) -> csr_matrix:
    array = np.asarray(S, dtype=np.float64)
    return csr_matrix(np.where(np.abs(array) > zero_tol, array, 0.0))


def matrix_density(S: ShiftInput, zero_tol: float = DEFAULT_ZERO_TOL) -> float:
    """Fraction of the n² entries that are nonzero (|·| > zero_tol for floating input)."""
    if isinstance(S, RationalMatrix):
        return S.nonzero_count() / (S.n * S.n)
    array = np.asarray(S, dtype=np.float64)
    return float(np.count_nonzero(np.abs(array) > zero_tol)) / array.size


def _offdiagonal_count(S: ShiftInput, zero_tol: float) -> int:
    if isinstance(S, RationalMatrix):
        return sum(1 for i in range(S.n) for j in range(S.n) if i != j and S[i, j] != 0)
    mask = np.abs(np.asarray(S, dtype=np.float64)) > zero_tol
    np.fill_diagonal(mask, False)
    return int(np.count_nonzero(mask))


def shift_signal(S: ShiftInput, x: Union[GraphSignal, Sequence]) -> GraphSignal:
    """
    S·x.

    Raises:
        DimensionMismatchError: If x does not have one value per node
    """
    if isinstance(S, RationalMatrix):
        values = _signal_values(x, S.n)
        return GraphSignal(values=tuple(S.apply([_as_fraction(v) for v in values])), exact=True)
    array = np.asarray(S, dtype=np.float64)
    values = _signal_values(x, array.shape[0])
    return GraphSignal(values=array @ np.array([float(v) for v in values]), exact=False)


def _exact_local_filter(S: RationalMatrix, h: Polynomial, x: list[Fraction]) -> list[Fraction]:
    neighbors = [[(j, value) for j, value in enumerate(row) if value != 0] for row in S.rows]
    coeffs = h.coeffs
    if not coeffs:
        return [Fraction(0)] * S.n
    y = [coeffs[-1] * v for v in x]
    for c in reversed(coeffs[:-1]):
        y = [sum((w * y[j] for j, w in row), Fraction(0)) + c * x[i] for i, row in enumerate(neighbors)]
    return y


def _float_local_filter(S: csr_matrix, coeffs: Sequence[float], x: np.ndarray) -> np.ndarray:
    if len(coeffs) == 0:
        return np.zeros_like(x)
    y = coeffs[-1] * x
    for c in reversed(coeffs[:-1]):
        y = S @ y + c * x
    return y


def apply_filter_locally(
    S: ShiftInput,
    h: FilterPolynomial,
    x: Union[GraphSignal, Sequence],
    zero_tol: float = DEFAULT_ZERO_TOL,
) -> tuple[GraphSignal, LocalityReport]:
    """
    Evaluate h(S)·x with deg h rounds of neighbor exchange.

    The exact path runs when S is a RationalMatrix and h a rational
    Polynomial; otherwise the floating path uses the support of S above
    zero_tol.

    Args:
        S: Shift matrix
        h: Filter polynomial (ascending coefficients)
        x: Input signal
        zero_tol: Support threshold for floating S

    Returns:
        tuple: (h(S)·x, LocalityReport)
    """
    if isinstance(S, RationalMatrix) and isinstance(h, Polynomial):
        values = [_as_fraction(v) for v in _signal_values(x, S.n)]
        output = GraphSignal(values=tuple(_exact_local_filter(S, h, values)), exact=True)
        hops = max(h.degree, 0)
        n = S.n
    else:
        array = S.to_numpy() if isinstance(S, RationalMatrix) else np.asarray(S, dtype=np.float64)
        n = array.shape[0]
        signal = np.array([float(v) for v in _signal_values(x, n)], dtype=np.float64)
        if isinstance(h, Polynomial):
            coeffs = [float(c) for c in h.coeffs]
        else:
            coeffs = list(np.trim_zeros(np.asarray(h.coef, dtype=np.float64), "b"))
        output = GraphSignal(values=_float_local_filter(_float_support(array, zero_tol), coeffs, signal), exact=False)
        hops = max(len(coeffs) - 1, 0)

    per_round = _offdiagonal_count(S, zero_tol)
    report = LocalityReport(
        hops=hops,
        messages_per_round=per_round,
        total_messages=hops * per_round,
        density=matrix_density(S, zero_tol),
    )
    logger.debug(f"Filtered {n}-node signal: {hops} hops, {per_round} messages per round")
    return output, report


def compare_locality(
    S: RationalMatrix,
    S_tilde: np.ndarray,
    h: FilterPolynomial,
    x: Union[GraphSignal, Sequence],
    zero_tol: float = DEFAULT_ZERO_TOL,
) -> LocalityComparison:
    """Run the same filter on S and on a converted S̃ and report both costs."""
    original_output, original = apply_filter_locally(S, h, x, zero_tol)
    converted_output, converted = apply_filter_locally(S_tilde, h, x, zero_tol)
    original = LocalityReport(
        hops=original.hops,
        messages_per_round=original.messages_per_round,
        total_messages=original.total_messages,
        density=original.density,
        converted_density=converted.density,
    )
    return LocalityComparison(
        original=original,
        converted=converted,
        original_output=original_output,
        converted_output=converted_output,
    )
