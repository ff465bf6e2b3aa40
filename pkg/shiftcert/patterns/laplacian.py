"""
Rerunning the analysis with the Laplacian D − A as the shift matrix.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from shiftcert.algebra.matrix import RationalMatrix
from shiftcert.algebra.minimal import char_poly
from shiftcert.algebra.polynomial import rational_roots
from shiftcert.analysis.filters import construct_nonrepresentable_filter
from shiftcert.analysis.invariance import RepresentabilityResult, commutes, represent_as_polynomial
from shiftcert.analysis.shift_enabled import ShiftEnabledReport, is_shift_enabled
from shiftcert.config import ToleranceConfig
from shiftcert.conversion.structure import PatternMode, SparsityPattern
from shiftcert.graphs import laplacian
from shiftcert.patterns.search import SearchOutcome, exists_shift_enabled_with_pattern

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LaplacianAnalysis:
    """
    Shift-enabled, invariance, representability and impossibility verdicts for L.

    ``eigenvalues`` lists the rational roots of p_L with multiplicities;
    ``eigenvalues_exact`` says whether they account for all n eigenvalues.
    """

    laplacian: RationalMatrix
    eigenvalues: list[tuple[Fraction, int]]
    eigenvalues_exact: bool
    shift_report: ShiftEnabledReport
    filter: Optional[RationalMatrix] = None
    commutes: Optional[bool] = None
    representability: Optional[RepresentabilityResult] = None
    impossibility: Optional[SearchOutcome] = None


def laplacian_variant(
    adjacency: RationalMatrix,
    H: Optional[RationalMatrix] = None,
    cfg: ToleranceConfig = ToleranceConfig(),
    trials: int = 100,
    seed: int = 0,
) -> LaplacianAnalysis:
    """
    Analyze L = D − A of an undirected graph.

    When no filter is given and L is not shift-enabled, an exact
    non-representable filter is constructed for L (if one exists) so the
    representability and impossibility steps still run.

    Args:
        adjacency: Symmetric adjacency matrix
        H: Filter to test against L
        cfg: Tolerances
        trials: Search budget for the loose-pattern impossibility step
        seed: Search seed

    Returns:
        LaplacianAnalysis: All verdicts for L
    """
    L = laplacian(adjacency)
    roots = rational_roots(char_poly(L))
    exact = sum(multiplicity for _, multiplicity in roots) == L.n
    report = is_shift_enabled(L, cfg)

    if H is None and not report.shift_enabled:
        constructed = construct_nonrepresentable_filter(L, cfg)
        H = constructed.matrix

    if H is None:
        return LaplacianAnalysis(laplacian=L, eigenvalues=roots, eigenvalues_exact=exact, shift_report=report)

    commuting = commutes(H, L)
    representability = represent_as_polynomial(H, L)
    pattern = SparsityPattern.from_matrix(L, PatternMode.LOOSE)
    impossibility = exists_shift_enabled_with_pattern(pattern, H=H, trials=trials, seed=seed)
    logger.info(
        f"Laplacian: shift_enabled={report.shift_enabled}, commutes={commuting}, "
        f"representable={representability.representable}, search={impossibility.status.value}"
    )
    return LaplacianAnalysis(
        laplacian=L,
        eigenvalues=roots,
        eigenvalues_exact=exact,
        shift_report=report,
        filter=H,
        commutes=commuting,
        representability=representability,
        impossibility=impossibility,
    )
