"""
The shift-enabled decision: characteristic versus minimal polynomial.

The verdict is exact. For symmetric inputs a floating cross-check based on
eigenvalue distinctness is recorded next to it.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from shiftcert.algebra.matrix import RationalMatrix
from shiftcert.algebra.minimal import char_poly, min_poly
from shiftcert.algebra.polynomial import Polynomial
from shiftcert.config import ToleranceConfig
from shiftcert.errors import ConvergenceError
from shiftcert.spectral.jacobi import SpectralDecomposition, has_distinct_eigenvalues, symm_eig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShiftEnabledReport:
    """Both polynomials of S and the verdict p_S = m_S."""

    n: int
    char_poly: Polynomial
    min_poly: Polynomial
    shift_enabled: bool
    symmetric_cross_check: Optional[bool] = None
    decomposition: Optional[SpectralDecomposition] = None

    @property
    def cross_check_agrees(self) -> Optional[bool]:
        if self.symmetric_cross_check is None:
            return None
        return self.symmetric_cross_check == self.shift_enabled


def is_shift_enabled(S: RationalMatrix, cfg: ToleranceConfig = ToleranceConfig()) -> ShiftEnabledReport:
    """
    Decide whether S is shift-enabled.

    Args:
        S: Square rational shift matrix
        cfg: Tolerances for the floating cross-check on symmetric input

    Returns:
        ShiftEnabledReport: Exact polynomials, verdict and cross-check
    """
    p = char_poly(S)
    m = min_poly(S)
    enabled = m.degree == S.n

    cross_check = None
    decomposition = None
    if S.is_symmetric():
        try:
            decomposition = symm_eig(S, cfg)
            cross_check = has_distinct_eigenvalues(decomposition, cfg)
        except ConvergenceError as e:
            logger.warning(f"Skipping eigenvalue cross-check: {e}")
        if cross_check is not None and cross_check != enabled:
            logger.warning(
                f"Eigenvalue distinctness ({cross_check}) disagrees with the exact verdict ({enabled}); "
                f"eig_sep_tol={cfg.eig_sep_tol:.1e} may be too coarse"
            )

    logger.info(f"{S.n}x{S.n} shift matrix: deg m_S = {m.degree}, shift_enabled={enabled}")
    return ShiftEnabledReport(
        n=S.n,
        char_poly=p,
        min_poly=m,
        shift_enabled=enabled,
        symmetric_cross_check=cross_check,
        decomposition=decomposition,
    )
