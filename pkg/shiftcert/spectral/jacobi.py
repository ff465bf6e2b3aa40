"""
Symmetric eigendecomposition by the cyclic Jacobi rotation method.

Rotations sweep the strict upper triangle row by row (cyclic-by-rows), which
keeps the output reproducible across platforms. Eigenvalues are returned in
ascending order and each eigenvector's first significant component is made
positive.
"""

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np

from shiftcert.algebra.matrix import RationalMatrix
from shiftcert.config import JACOBI_SWEEP_CAP, ToleranceConfig
from shiftcert.errors import ConvergenceError, DimensionMismatchError, NotSymmetricError

logger = logging.getLogger(__name__)

SymmetricInput = Union[RationalMatrix, np.ndarray]


@dataclass(frozen=True)
class SpectralDecomposition:
    """Floating eigenvalues (ascending) with column eigenvectors T."""

    eigenvalues: np.ndarray
    vectors: np.ndarray
    residual: float
    sweeps: int

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def T(self) -> np.ndarray:
        return self.vectors

    def orthogonality_error(self) -> float:
        n = self.n
        return float(np.max(np.abs(self.vectors.T @ self.vectors - np.eye(n)))) if n else 0.0

    def eigen_residuals(self, matrix: np.ndarray) -> np.ndarray:
        """max-abs of M·tᵢ − λᵢ·tᵢ per eigenpair."""
        diff = matrix @ self.vectors - self.vectors * self.eigenvalues
        return np.max(np.abs(diff), axis=0)


def as_float_symmetric(matrix: SymmetricInput, cfg: ToleranceConfig) -> np.ndarray:
    """
    Floating copy of a symmetric input.

    Raises:
        NotSymmetricError: If the input is not symmetric (exactly for rational
            input, within resid_tol for floating input)
        DimensionMismatchError: If the input is not square
    """
    if isinstance(matrix, RationalMatrix):
        if not matrix.is_symmetric():
            raise NotSymmetricError("Symmetric eigendecomposition needs a symmetric matrix")
        return matrix.to_numpy()
    array = np.array(matrix, dtype=np.float64)
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        raise DimensionMismatchError(f"Expected a non-empty square matrix, got shape {array.shape}")
    if np.max(np.abs(array - array.T)) > cfg.resid_tol:
        raise NotSymmetricError("Symmetric eigendecomposition needs a symmetric matrix")
    return array


def _off_diagonal_mass(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def normalize_signs(vectors: np.ndarray, threshold: float) -> np.ndarray:
    """Flip each column so its first component with |·| > threshold is positive."""
    result = vectors.copy()
    for column in range(result.shape[1]):
        significant = np.nonzero(np.abs(result[:, column]) > threshold)[0]
        if significant.size and result[significant[0], column] < 0:
            result[:, column] = -result[:, column]
    return result


def jacobi_eigh(array: np.ndarray, cfg: ToleranceConfig) -> tuple[np.ndarray, np.ndarray, int]:
    """
    Raw cyclic Jacobi iteration on a symmetric float array.

    Returns:
        tuple: (unsorted eigenvalues, eigenvector columns, sweeps used)

    Raises:
        ConvergenceError: If the off-diagonal mass stays above resid_tol after
            the sweep cap
    """
    a = array.astype(np.float64, copy=True)
    n = a.shape[0]
    v = np.eye(n)
    sweeps = 0
    while _off_diagonal_mass(a) >= cfg.resid_tol:
        if sweeps >= JACOBI_SWEEP_CAP:
            raise ConvergenceError(
                f"Jacobi did not converge in {JACOBI_SWEEP_CAP} sweeps "
                f"(off-diagonal mass {_off_diagonal_mass(a):.3e}, resid_tol {cfg.resid_tol:.1e})"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0

                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    return np.diag(a).copy(), v, sweeps


def symm_eig(matrix: SymmetricInput, cfg: ToleranceConfig = ToleranceConfig()) -> SpectralDecomposition:
    """
    Eigendecomposition of a symmetric matrix.

    Args:
        matrix: Symmetric RationalMatrix, or a floating symmetric array
        cfg: Tolerances (resid_tol stops the sweeps)

    Returns:
        SpectralDecomposition: Ascending eigenvalues, sign-normalized eigenvectors

    Raises:
        NotSymmetricError: If the input is not symmetric
        ConvergenceError: If Jacobi hits the sweep cap or T drifts from orthonormal beyond orth_tol
    """
    array = as_float_symmetric(matrix, cfg)
    values, vectors, sweeps = jacobi_eigh(array, cfg)
    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = normalize_signs(vectors[:, order], cfg.resid_tol)
    require_orthonormal(vectors, cfg)
    projected = vectors.T @ array @ vectors
    off = projected - np.diag(np.diag(projected))
    residual = float(np.max(np.abs(off))) if off.size else 0.0
    logger.debug(f"Jacobi converged in {sweeps} sweeps, residual {residual:.3e}")
    return SpectralDecomposition(eigenvalues=values, vectors=vectors, residual=residual, sweeps=sweeps)


def eigenvalue_clusters(values: np.ndarray, tol: float) -> list[list[int]]:
    """
    Single-linkage clusters of ascending eigenvalues.

    Consecutive values closer than ``tol`` share a cluster. Returns index
    lists in ascending order.
    """
    clusters: list[list[int]] = []
    for index, value in enumerate(values):
        if clusters and value - values[clusters[-1][-1]] < tol:
            clusters[-1].append(index)
        else:
            clusters.append([index])
    return clusters


def require_orthonormal(vectors: np.ndarray, cfg: ToleranceConfig) -> float:
    """
    Max-abs deviation of TᵀT from the identity, checked against orth_tol.

    Raises:
        ConvergenceError: If the deviation exceeds orth_tol
    """
    n = vectors.shape[1]
    error = float(np.max(np.abs(vectors.T @ vectors - np.eye(n)))) if n else 0.0
    if error > cfg.orth_tol:
        raise ConvergenceError(f"Eigenbasis orthogonality error {error:.3e} exceeds {cfg.orth_tol:.1e}")
    return error


def has_distinct_eigenvalues(decomposition: SpectralDecomposition, cfg: ToleranceConfig = ToleranceConfig()) -> bool:
    """True iff every consecutive gap of the sorted eigenvalues exceeds eig_sep_tol."""
    gaps = np.diff(decomposition.eigenvalues)
    return bool(np.all(gaps > cfg.eig_sep_tol))
