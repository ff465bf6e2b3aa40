"""
Simultaneous diagonalization of two commuting symmetric matrices.

S is diagonalized first. Each cluster of (numerically) equal eigenvalues of
S spans an eigenspace that H maps into itself, so H is projected onto that
eigenspace, diagonalized there, and the basis is rotated accordingly.
"""

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np

from shiftcert.algebra.matrix import RationalMatrix
from shiftcert.config import ToleranceConfig
from shiftcert.errors import DimensionMismatchError, ConvergenceError, NotCommutingError
from shiftcert.spectral.jacobi import (
    as_float_symmetric,
    eigenvalue_clusters,
    jacobi_eigh,
    normalize_signs,
    require_orthonormal,
    symm_eig,
)

logger = logging.getLogger(__name__)

MatrixInput = Union[RationalMatrix, np.ndarray]


@dataclass(frozen=True)
class JointDiagonalization:
    """
    Common orthonormal eigenbasis of S and H.

    Attributes:
        T: Column eigenvectors shared by S and H
        s_values: Diagonal of TᵀST (ascending in S, grouped by cluster)
        h_values: Diagonal of TᵀHT in the same column order
        clusters: Column index groups of equal S eigenvalues
        residuals: Max-abs off-diagonal entries of (TᵀST, TᵀHT)
    """

    T: np.ndarray
    s_values: np.ndarray
    h_values: np.ndarray
    clusters: list[list[int]]
    residuals: tuple[float, float]


def _max_off_diagonal(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.max(np.abs(off))) if off.size else 0.0


def relative_commutator(h: np.ndarray, s: np.ndarray) -> float:
    """‖HS − SH‖_F / (1 + ‖H‖_F‖S‖_F)."""
    commutator = h @ s - s @ h
    scale = 1.0 + np.linalg.norm(h) * np.linalg.norm(s)
    return float(np.linalg.norm(commutator) / scale)


def floating_commutes(h: MatrixInput, s: MatrixInput, cfg: ToleranceConfig = ToleranceConfig()) -> bool:
    """
    Commutation test for matrices where at least one side is floating.

    Two RationalMatrix arguments are compared exactly instead.
    """
    if isinstance(h, RationalMatrix) and isinstance(s, RationalMatrix):
        if h.n != s.n:
            raise DimensionMismatchError(f"Dimension mismatch: {h.n} vs {s.n}")
        return (h @ s - s @ h).is_zero()
    h_array = h.to_numpy() if isinstance(h, RationalMatrix) else np.asarray(h, dtype=np.float64)
    s_array = s.to_numpy() if isinstance(s, RationalMatrix) else np.asarray(s, dtype=np.float64)
    if h_array.shape != s_array.shape:
        raise DimensionMismatchError(f"Dimension mismatch: {h_array.shape} vs {s_array.shape}")
    return relative_commutator(h_array, s_array) <= cfg.commute_tol


def joint_diagonalize(
    S: MatrixInput,
    H: MatrixInput,
    cfg: ToleranceConfig = ToleranceConfig(),
) -> JointDiagonalization:
    """
    Find an orthogonal T diagonalizing both S and H.

    Args:
        S: Symmetric shift matrix (rational or floating)
        H: Symmetric filter commuting with S
        cfg: Tolerances; eig_sep_tol groups the eigenvalues of S

    Returns:
        JointDiagonalization: The shared basis and both diagonals

    Raises:
        NotSymmetricError: If S or H is not symmetric
        DimensionMismatchError: If S and H differ in size
        NotCommutingError: If HS ≠ SH (exactly, or beyond commute_tol)
        ConvergenceError: If the rotated basis misses the residual bound
            or drifts from orthonormal beyond orth_tol
    """
    s_array = as_float_symmetric(S, cfg)
    h_array = as_float_symmetric(H, cfg)
    if s_array.shape != h_array.shape:
        raise DimensionMismatchError(f"Dimension mismatch: {s_array.shape} vs {h_array.shape}")
    if not floating_commutes(H, S, cfg):
        raise NotCommutingError("Joint diagonalization needs HS = SH")

    base = symm_eig(s_array, cfg)
    clusters = eigenvalue_clusters(base.eigenvalues, cfg.eig_sep_tol)
    vectors = base.vectors.copy()
    for cluster in clusters:
        if len(cluster) < 2:
            continue
        block = vectors[:, cluster]
        projected = block.T @ h_array @ block
        projected = (projected + projected.T) / 2.0
        values, rotation, _ = jacobi_eigh(projected, cfg)
        order = np.argsort(values, kind="stable")
        vectors[:, cluster] = block @ rotation[:, order]
        logger.debug(f"Rotated eigenspace of size {len(cluster)} at λ ≈ {base.eigenvalues[cluster[0]]:.6g}")
    vectors = normalize_signs(vectors, cfg.resid_tol)
    require_orthonormal(vectors, cfg)

    s_diag = vectors.T @ s_array @ vectors
    h_diag = vectors.T @ h_array @ vectors
    residuals = (_max_off_diagonal(s_diag), _max_off_diagonal(h_diag))
    scale = 1.0 + max(float(np.max(np.abs(s_array))), float(np.max(np.abs(h_array))))
    if max(residuals) > cfg.resid_tol * scale:
        raise ConvergenceError(
            f"Joint diagonalization residuals {residuals[0]:.3e}, {residuals[1]:.3e} "
            f"exceed {cfg.resid_tol * scale:.1e}"
        )
    return JointDiagonalization(
        T=vectors,
        s_values=np.diag(s_diag).copy(),
        h_values=np.diag(h_diag).copy(),
        clusters=clusters,
        residuals=residuals,
    )


def joint_diagonalizer(
    S: MatrixInput,
    H: MatrixInput,
    cfg: ToleranceConfig = ToleranceConfig(),
) -> np.ndarray:
    """Orthogonal T with TᵀST and TᵀHT diagonal."""
    return joint_diagonalize(S, H, cfg).T
