"""
One-shot reproduction of the worked star and cycle examples.

Each numbered item bundles the exact and floating checks for one claim;
an item passes only when every one of its checks does.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from shiftcert.algebra.matrix import RationalMatrix
from shiftcert.algebra.minimal import krylov_rank, min_poly
from shiftcert.algebra.polynomial import Polynomial
from shiftcert.analysis.invariance import commutes, represent_as_polynomial
from shiftcert.analysis.shift_enabled import is_shift_enabled
from shiftcert.config import ToleranceConfig
from shiftcert.conversion.convert import convert_to_shift_enabled
from shiftcert.conversion.structure import PatternMode, SparsityPattern
from shiftcert.graphs import (
    cycle_adjacency,
    cycle_witness_filter,
    loose_star_shift,
    star_adjacency,
    star_witness_filter,
)
from shiftcert.patterns.certificates import (
    CertificateKind,
    certify_power_equality,
    random_weightings,
    replay_certificate,
)
from shiftcert.patterns.commutant import commutant_with_pattern
from shiftcert.patterns.laplacian import laplacian_variant
from shiftcert.patterns.search import SearchStatus, exists_shift_enabled_with_pattern
from shiftcert.spectral.jacobi import has_distinct_eigenvalues, symm_eig

logger = logging.getLogger(__name__)

LOOSE_STAR_EIGENVALUES = (-1.8136, 0.0, 0.4707, 1.0, 2.3429)


@dataclass
class ItemResult:
    number: int
    title: str
    checks: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(ok for _, ok in self.checks)

    def check(self, description: str, ok: bool) -> None:
        self.checks.append((description, bool(ok)))


def _star_polynomials(item: ItemResult, cfg: ToleranceConfig) -> None:
    report = is_shift_enabled(star_adjacency(), cfg)
    item.check("p_S = λ⁵ − 4λ³", report.char_poly == Polynomial([0, 0, 0, -4, 0, 1]))
    item.check("m_S = λ³ − 4λ", report.min_poly == Polynomial([0, -4, 0, 1]))
    item.check("Krylov rank of I, S, ..., S⁴ is 3", krylov_rank(star_adjacency()) == 3)
    item.check("S is not shift-enabled", not report.shift_enabled)


def _star_filter(item: ItemResult, cfg: ToleranceConfig) -> None:
    S, H = star_adjacency(), star_witness_filter()
    item.check("HS = 0 and SH = 0", (H @ S).is_zero() and (S @ H).is_zero())
    item.check("H commutes with S", commutes(H, S))
    result = represent_as_polynomial(H, S)
    item.check("H is not a polynomial in S", not result.representable)
    item.check("witness replays", result.verify(H, S))
    item.check("witness pair is ((2,3),(2,4))", result.witness_pair == ((2, 3), (2, 4)))


def _loose_star(item: ItemResult, cfg: ToleranceConfig) -> None:
    S_tilde, H = loose_star_shift(), star_witness_filter()
    item.check("S̃ is shift-enabled", is_shift_enabled(S_tilde, cfg).shift_enabled)
    values = symm_eig(S_tilde, cfg).eigenvalues
    item.check(
        "eigenvalues match (−1.8136, 0, 0.4707, 1, 2.3429) within 5e-5",
        bool(np.all(np.abs(values - np.array(LOOSE_STAR_EIGENVALUES)) <= 5e-5)),
    )
    item.check("H commutes with S̃", commutes(H, S_tilde))
    result = represent_as_polynomial(H, S_tilde)
    item.check("H = h(S̃) exactly", result.representable and result.verify(H, S_tilde))


def _strict_star(item: ItemResult, cfg: ToleranceConfig) -> None:
    pattern = SparsityPattern.from_matrix(star_adjacency(), PatternMode.STRICT)
    outcome = exists_shift_enabled_with_pattern(pattern)
    cert = outcome.certificate
    item.check("search is impossible", outcome.status is SearchStatus.IMPOSSIBLE)
    item.check("certificate is rank deficiency", cert is not None and cert.kind is CertificateKind.RANK_DEFICIENCY)
    if cert is None or cert.kind is not CertificateKind.RANK_DEFICIENCY:
        return
    item.check("structural rank 2", cert.details.structural_rank == 2)
    item.check("kernel multiplicity >= 3", cert.details.kernel_multiplicity >= 3)
    degrees = [min_poly(weighting).degree for weighting in random_weightings(pattern, 1000, seed=0)]
    item.check("1000 random weightings have deg m_S ≤ 3", max(degrees) <= 3)
    item.check("certificate replays", replay_certificate(cert, samples=100, seed=1))


def _cycle(item: ItemResult, cfg: ToleranceConfig) -> None:
    S, H = cycle_adjacency(4), cycle_witness_filter()
    values = symm_eig(S, cfg).eigenvalues
    item.check("eigenvalues (−2, 0, 0, 2) within 1e-9", bool(np.all(np.abs(values - np.array([-2.0, 0.0, 0.0, 2.0])) <= 1e-9)))
    item.check("S′ is not shift-enabled", not is_shift_enabled(S, cfg).shift_enabled)
    item.check("H′ commutes with S′", commutes(H, S))
    family = commutant_with_pattern(H, SparsityPattern.from_matrix(S, PatternMode.LOOSE))
    item.check("loose commutant has dimension 2", family.dimension == 2)
    item.check("commutant contains I and S′", family.contains(RationalMatrix.identity(4)) and family.contains(S))
    cert = certify_power_equality(H, family)
    item.check("power-equality certificate found", cert is not None)
    if cert is None:
        return
    item.check("certificate pair is ((1,2),(1,4))", cert.details.pair == ((1, 2), (1, 4)))
    item.check("certificate covers k = 0..3", [k for k, _, _ in cert.details.powers] == [0, 1, 2, 3])
    item.check("certificate replays", replay_certificate(cert))


def _laplacian(item: ItemResult, cfg: ToleranceConfig) -> None:
    analysis = laplacian_variant(cycle_adjacency(4), cycle_witness_filter(), cfg)
    item.check(
        "L′ eigenvalues {0, 2, 2, 4} exactly",
        analysis.eigenvalues == [(Fraction(0), 1), (Fraction(2), 2), (Fraction(4), 1)],
    )
    item.check("L′ is not shift-enabled", not analysis.shift_report.shift_enabled)
    item.check("H′ commutes with L′", bool(analysis.commutes))
    item.check("H′ is not a polynomial in L′", analysis.representability is not None and not analysis.representability.representable)


def _conversion(item: ItemResult, cfg: ToleranceConfig) -> None:
    outcome = convert_to_shift_enabled(star_adjacency(), star_witness_filter(), cfg=cfg)
    item.check("S̃ has distinct eigenvalues", outcome.shift_enabled and has_distinct_eigenvalues(symm_eig(outcome.S_tilde, cfg), cfg))
    item.check("H commutes with S̃ within tolerance", outcome.commutes_with_H)
    item.check("r(S̃) recovers S within 1e-6", outcome.recovery_residual is not None and outcome.recovery_residual <= 1e-6)
    item.check("S̃ does not strictly describe the star", not outcome.strict_same_graph)


ITEMS: list[tuple[int, str, Callable[[ItemResult, ToleranceConfig], None]]] = [
    (1, "star characteristic and minimal polynomials", _star_polynomials),
    (2, "star filter is shift-invariant but not a polynomial", _star_filter),
    (3, "self loops on the star give a shift-enabled S̃", _loose_star),
    (4, "no strict-pattern star weighting is shift-enabled", _strict_star),
    (5, "cycle commutant forces a power equality", _cycle),
    (6, "the cycle result holds for the Laplacian", _laplacian),
    (7, "eigenvalue-perturbation conversion of the star", _conversion),
]


def run_reproduction(cfg: ToleranceConfig = ToleranceConfig()) -> list[ItemResult]:
    """Run every numbered item; an exception inside an item fails that item."""
    results = []
    for number, title, runner in ITEMS:
        item = ItemResult(number=number, title=title)
        try:
            runner(item, cfg)
        except Exception as e:
            logger.error(f"Item {number} raised {type(e).__name__}: {e}")
            item.check(f"raised {type(e).__name__}: {e}", False)
        results.append(item)
    return results


def format_results(results: list[ItemResult]) -> str:
    lines = []
    for item in results:
        lines.append(f"{'PASS' if item.passed else 'FAIL'} {item.number} {item.title}")
        for description, ok in item.checks:
            lines.append(f"    {'ok  ' if ok else 'FAIL'} {description}")
    failures = sum(1 for item in results if not item.passed)
    lines.append(f"{len(results) - failures}/{len(results)} items passed")
    return "\n".join(lines) + "\n"
