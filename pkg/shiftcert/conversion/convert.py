"""
Converting a non-shift-enabled S into a shift-enabled S̃ and auditing the result.

S and H are diagonalized together; inside every repeated eigenvalue of S
the eigenvalues are spread apart, S̃ = T·Λ_perturb·Tᵀ is rebuilt, and S is
recovered as a polynomial r(S̃). The audit then reports whether S̃ still
describes the graph of S.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from numpy.polynomial import Polynomial as FloatPolynomial
from pydantic import BaseModel, Field

from shiftcert.algebra.matrix import RationalMatrix
from shiftcert.config import DEFAULT_ZERO_TOL, ToleranceConfig
from shiftcert.conversion.structure import PatternMode, describes_same_graph
from shiftcert.errors import DistinctnessError
from shiftcert.spectral.jacobi import has_distinct_eigenvalues, symm_eig
from shiftcert.spectral.joint import floating_commutes, joint_diagonalize

logger = logging.getLogger(__name__)

MatrixInput = Union[RationalMatrix, np.ndarray]


class PerturbationPolicy(BaseModel):
    """How far apart the eigenvalues of a repeated cluster are pushed."""

    epsilon: Optional[float] = Field(
        default=None,
        gt=0,
        description="Step between perturbed eigenvalues; None means 1e-3·(1 + spectral radius)",
    )
    epsilon_scale: float = Field(
        default=1.0,
        ge=0,
        description="Multiplier on epsilon; 0 gives the identity conversion",
    )
    zero_tol: float = Field(
        default=DEFAULT_ZERO_TOL,
        gt=0,
        description="Entries of S̃ with |·| at or below this count as zero",
    )

    model_config = {"frozen": True}

    @classmethod
    def zero(cls) -> "PerturbationPolicy":
        return cls(epsilon_scale=0.0)

    def resolve_epsilon(self, spectral_radius: float) -> float:
        base = self.epsilon if self.epsilon is not None else 1e-3 * (1.0 + spectral_radius)
        return base * self.epsilon_scale


DEFAULT_POLICY_SET: tuple[PerturbationPolicy, ...] = tuple(
    PerturbationPolicy(epsilon_scale=scale) for scale in (0.1, 1.0, 10.0, 100.0)
)


@dataclass(frozen=True)
class RecoveryResult:
    """
    r with S ≈ r(S̃).

    Attributes:
        poly: Floating interpolation polynomial (ascending coefficients)
        residual: max-abs entry of r(S̃) − S
        commutes: Whether S and S̃ commute within commute_tol
        pairs: (eigenvalue of S̃, matching eigenvalue of S) per eigenvector
    """

    poly: FloatPolynomial
    residual: float
    commutes: bool
    pairs: list[tuple[float, float]]


@dataclass(frozen=True)
class ConversionOutcome:
    """S̃ together with the audit of its three guarantees and its graph structure."""

    S_tilde: np.ndarray
    T: np.ndarray
    original_eigenvalues: np.ndarray
    perturbed_eigenvalues: np.ndarray
    epsilon: float
    shift_enabled: bool
    commutes_with_H: bool
    strict_same_graph: bool
    loose_same_graph: bool
    recovery: Optional[RecoveryResult]
    density_original: float
    density_converted: float

    @property
    def recovery_poly(self) -> Optional[FloatPolynomial]:
        return self.recovery.poly if self.recovery is not None else None

    @property
    def recovery_residual(self) -> Optional[float]:
        return self.recovery.residual if self.recovery is not None else None


def _density(array: np.ndarray, zero_tol: float) -> float:
    return float(np.count_nonzero(np.abs(array) > zero_tol)) / array.size


def _cluster_offsets(clusters: list[list[int]], n: int, epsilon: float) -> np.ndarray:
    """(0, ε, 2ε, ...) across each cluster, in cluster column order."""
    offsets = np.zeros(n)
    for cluster in clusters:
        for rank, column in enumerate(cluster):
            offsets[column] = rank * epsilon
    return offsets


def eval_float_matrix_poly(poly: FloatPolynomial, matrix: np.ndarray) -> np.ndarray:
    """r(M) by Horner's rule on matrices."""
    n = matrix.shape[0]
    result = np.zeros((n, n))
    for c in reversed(poly.coef):
        result = result @ matrix + c * np.eye(n)
    return result


def recover_original(
    S: MatrixInput,
    S_tilde: np.ndarray,
    cfg: ToleranceConfig = ToleranceConfig(),
) -> RecoveryResult:
    """
    Fit r with r(S̃) = S by Vandermonde interpolation.

    Each eigenvector tᵢ of S̃ is paired with the Rayleigh quotient tᵢᵀStᵢ,
    so the pairing follows the shared eigenbasis rather than sorted values.

    Args:
        S: Original shift matrix
        S_tilde: Converted matrix with distinct eigenvalues
        cfg: Tolerances

    Returns:
        RecoveryResult: r, its residual, and whether S and S̃ commute

    Raises:
        DistinctnessError: If S̃ has eigenvalues closer than eig_sep_tol
    """
    s_array = S.to_numpy() if isinstance(S, RationalMatrix) else np.asarray(S, dtype=np.float64)
    tilde = np.asarray(S_tilde, dtype=np.float64)
    decomposition = symm_eig(tilde, cfg)
    if not has_distinct_eigenvalues(decomposition, cfg):
        raise DistinctnessError(
            f"S̃ has eigenvalues closer than eig_sep_tol={cfg.eig_sep_tol:.1e}; r(S̃) = S is not determined"
        )
    vectors = decomposition.vectors
    targets = np.einsum("ij,ik,kj->j", vectors, s_array, vectors)
    pairs = [(float(a), float(b)) for a, b in zip(decomposition.eigenvalues, targets)]
    commuting = floating_commutes(s_array, tilde, cfg)

    if np.array_equal(tilde, s_array):
        return RecoveryResult(poly=FloatPolynomial([0.0, 1.0]), residual=0.0, commutes=True, pairs=pairs)

    vandermonde = np.vander(decomposition.eigenvalues, increasing=True)
    poly = FloatPolynomial(np.linalg.solve(vandermonde, targets))
    residual = float(np.max(np.abs(eval_float_matrix_poly(poly, tilde) - s_array)))
    if not commuting:
        logger.warning(f"S and S̃ do not commute; recovery residual {residual:.3e}")
    logger.debug(f"Recovered r of degree {poly.degree()} with residual {residual:.3e}")
    return RecoveryResult(poly=poly, residual=residual, commutes=commuting, pairs=pairs)


def convert_to_shift_enabled(
    S: RationalMatrix,
    H: RationalMatrix,
    policy: PerturbationPolicy = PerturbationPolicy(),
    cfg: ToleranceConfig = ToleranceConfig(),
) -> ConversionOutcome:
    """
    Build a shift-enabled S̃ commuting with H and audit its structure.

    Args:
        S: Symmetric rational shift matrix
        H: Symmetric rational filter with HS = SH
        policy: Perturbation step and support threshold
        cfg: Tolerances

    Returns:
        ConversionOutcome: S̃, the perturbed spectrum and the full audit

    Raises:
        NotSymmetricError: If S or H is not symmetric
        NotCommutingError: If HS ≠ SH
    """
    joint = joint_diagonalize(S, H, cfg)
    s_array = S.to_numpy()
    n = S.n
    spectral_radius = float(np.max(np.abs(joint.s_values)))
    epsilon = policy.resolve_epsilon(spectral_radius)
    offsets = _cluster_offsets(joint.clusters, n, epsilon)
    perturbed = joint.s_values + offsets

    if not np.any(offsets):
        S_tilde = s_array.copy()
    else:
        S_tilde = joint.T @ np.diag(perturbed) @ joint.T.T
        S_tilde = (S_tilde + S_tilde.T) / 2.0

    decomposition = symm_eig(S_tilde, cfg)
    shift_enabled = has_distinct_eigenvalues(decomposition, cfg)
    commutes_with_H = floating_commutes(H, S_tilde, cfg)
    strict = describes_same_graph(S, S_tilde, PatternMode.STRICT, policy.zero_tol)
    loose = describes_same_graph(S, S_tilde, PatternMode.LOOSE, policy.zero_tol)

    recovery = None
    if shift_enabled:
        recovery = recover_original(S, S_tilde, cfg)

    outcome = ConversionOutcome(
        S_tilde=S_tilde,
        T=joint.T,
        original_eigenvalues=joint.s_values,
        perturbed_eigenvalues=perturbed,
        epsilon=epsilon,
        shift_enabled=shift_enabled,
        commutes_with_H=commutes_with_H,
        strict_same_graph=strict,
        loose_same_graph=loose,
        recovery=recovery,
        density_original=_density(s_array, policy.zero_tol),
        density_converted=_density(S_tilde, policy.zero_tol),
    )
    logger.info(
        f"Converted {n}x{n} shift (ε={epsilon:.3g}): shift_enabled={shift_enabled}, "
        f"commutes={commutes_with_H}, strict={strict}, loose={loose}"
    )
    return outcome
