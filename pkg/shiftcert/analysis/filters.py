"""
Building shift-invariant filters that are not polynomials in S.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from shiftcert.algebra.elimination import nullspace_exact
from shiftcert.algebra.matrix import RationalMatrix, Scalar, _as_fraction
from shiftcert.algebra.minimal import char_poly, eval_matrix_poly, min_poly
from shiftcert.algebra.polynomial import Polynomial, rational_roots
from shiftcert.config import ToleranceConfig
from shiftcert.errors import NotSymmetricError, ShiftEnabledError
from shiftcert.spectral.jacobi import eigenvalue_clusters, symm_eig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstructedFilter:
    """
    A symmetric filter commuting with S that no polynomial in S reproduces.

    Attributes:
        values: Floating entries (always present)
        matrix: Exact entries when the eigenspace had a rational basis
        exact: Whether ``matrix`` is set
        eigenvalue: The repeated eigenvalue whose eigenspace H acts on
        eigenspace_dimension: Multiplicity of that eigenvalue
    """

    values: np.ndarray
    matrix: Optional[RationalMatrix]
    exact: bool
    eigenvalue: Union[Fraction, float]
    eigenspace_dimension: int


def _outer_sum(b1: list[Fraction], b2: list[Fraction]) -> RationalMatrix:
    """b₁b₂ᵀ + b₂b₁ᵀ."""
    n = len(b1)
    return RationalMatrix(
        [[b1[i] * b2[j] + b2[i] * b1[j] for j in range(n)] for i in range(n)],
        symmetric=True,
    )


def construct_nonrepresentable_filter(
    S: RationalMatrix,
    cfg: ToleranceConfig = ToleranceConfig(),
) -> ConstructedFilter:
    """
    Build H with HS = SH that is not a polynomial in S.

    H acts as b₁b₂ᵀ + b₂b₁ᵀ on a repeated eigenspace spanned by b₁, b₂ and
    as zero elsewhere. Every polynomial in S is a scalar on that eigenspace;
    H is not. Rational repeated eigenvalues (ascending) are tried first and
    give an exact H; otherwise the lowest degenerate eigenvalue cluster of
    the floating decomposition is used and the result is flagged inexact.
    So the chosen eigenspace is not always the lowest-indexed degenerate
    cluster: a rational repeated eigenvalue above an irrational one wins.

    Args:
        S: Symmetric rational shift matrix
        cfg: Tolerances for the floating fallback

    Returns:
        ConstructedFilter: The filter and the eigenspace it was built on

    Raises:
        NotSymmetricError: If S is not symmetric
        ShiftEnabledError: If S is shift-enabled (every commuting filter is
            then a polynomial in S)
    """
    if not S.is_symmetric():
        raise NotSymmetricError("Filter construction needs a symmetric shift matrix")
    if min_poly(S).degree == S.n:
        raise ShiftEnabledError("S is shift-enabled: every commuting filter is a polynomial in S")

    identity = RationalMatrix.identity(S.n)
    for root, multiplicity in rational_roots(char_poly(S)):
        if multiplicity < 2:
            continue
        basis = nullspace_exact(S - identity * root)
        if len(basis) < 2:
            continue
        H = _outer_sum(basis[0], basis[1])
        logger.info(f"Built exact non-representable filter on the λ = {root} eigenspace (dim {len(basis)})")
        return ConstructedFilter(
            values=H.to_numpy(),
            matrix=H,
            exact=True,
            eigenvalue=root,
            eigenspace_dimension=len(basis),
        )

    decomposition = symm_eig(S, cfg)
    for cluster in eigenvalue_clusters(decomposition.eigenvalues, cfg.eig_sep_tol):
        if len(cluster) < 2:
            continue
        v1 = decomposition.vectors[:, cluster[0]]
        v2 = decomposition.vectors[:, cluster[1]]
        values = np.outer(v1, v2) + np.outer(v2, v1)
        eigenvalue = float(np.mean(decomposition.eigenvalues[cluster]))
        logger.warning(
            f"Repeated eigenvalue {eigenvalue:.6g} has no rational eigenbasis; returning a floating filter"
        )
        return ConstructedFilter(
            values=values,
            matrix=None,
            exact=False,
            eigenvalue=eigenvalue,
            eigenspace_dimension=len(cluster),
        )

    # deg m_S < n but no cluster: eig_sep_tol is finer than the rounding error
    raise ShiftEnabledError(
        f"No repeated eigenvalue resolved at eig_sep_tol={cfg.eig_sep_tol:.1e}"
    )


def filter_family_member(
    S: RationalMatrix,
    H: RationalMatrix,
    alpha: Scalar,
    q: Polynomial,
) -> RationalMatrix:
    """αH + q(S), exactly."""
    return H * _as_fraction(alpha) + eval_matrix_poly(q, S)
