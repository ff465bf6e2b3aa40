"""
Impossibility certificates for shift-enabled matrices with a fixed pattern.

Two kinds are produced:

* rank deficiency: the pattern's structural rank r leaves a kernel of
  dimension at least n − r ≥ 2 in every weighting, so 0 is a repeated
  eigenvalue of every symmetric member and none is shift-enabled.
* power equality: every candidate commuting with H is aI + bC, every
  power of C agrees at two positions where H differs, so H is not a
  polynomial in any candidate.

Each certificate records the numbers it relies on and can be replayed.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from shiftcert.algebra.matrix import RationalMatrix
from shiftcert.algebra.minimal import min_poly
from shiftcert.analysis.invariance import WitnessPair, witness_pair_candidates
from shiftcert.conversion.structure import PatternMode, SparsityPattern
from shiftcert.patterns.commutant import CommutantFamily

logger = logging.getLogger(__name__)

WEIGHT_NUMERATORS = tuple(k for k in range(-64, 65) if k != 0)
WEIGHT_DENOMINATOR = 16


class CertificateKind(str, Enum):
    RANK_DEFICIENCY = "rank_deficiency"
    POWER_EQUALITY = "power_equality"


@dataclass(frozen=True)
class RankDeficiencyDetails:
    """Structural rank bound with the maximum matching that attains it (0-based row, column)."""

    n: int
    structural_rank: int
    kernel_multiplicity: int
    matching: list[tuple[int, int]]


@dataclass(frozen=True)
class PowerEqualityDetails:
    """
    Cᵏ agrees at ``pair`` for k = 0..n−1 while the filter differs there.

    ``powers`` lists (k, Cᵏ at first position, Cᵏ at second position);
    positions are 1-based.
    """

    generator: RationalMatrix
    filter: RationalMatrix
    pair: WitnessPair
    powers: list[tuple[int, Fraction, Fraction]]
    filter_values: tuple[Fraction, Fraction]


@dataclass(frozen=True)
class ImpossibilityCertificate:
    kind: CertificateKind
    pattern: SparsityPattern
    details: Union[RankDeficiencyDetails, PowerEqualityDetails]

    def summary(self) -> str:
        if isinstance(self.details, RankDeficiencyDetails):
            d = self.details
            return (
                f"structural rank {d.structural_rank} of {d.n}: eigenvalue 0 has multiplicity "
                f">= {d.kernel_multiplicity} in every weighting"
            )
        d = self.details
        (i, j), (k, l) = d.pair
        return (
            f"C^k[{i},{j}] = C^k[{k},{l}] for k = 0..{len(d.powers) - 1} "
            f"but H[{i},{j}] = {d.filter_values[0]} != {d.filter_values[1]} = H[{k},{l}]"
        )


def _matching(pattern: SparsityPattern) -> list[tuple[int, int]]:
    graph = csr_matrix(pattern.mask().astype(np.int8))
    matched = maximum_bipartite_matching(graph, perm_type="column")
    return [(row, int(column)) for row, column in enumerate(matched) if column >= 0]


def structural_rank(pattern: SparsityPattern) -> int:
    """Maximum rank over all weightings of the pattern (size of a maximum bipartite matching)."""
    return len(_matching(pattern))


def certify_rank_deficiency(pattern: SparsityPattern) -> Optional[ImpossibilityCertificate]:
    """
    Certificate when every weighting of a strict pattern has a repeated zero eigenvalue.

    Returns:
        Optional[ImpossibilityCertificate]: None for loose patterns or when
            n − structural rank < 2
    """
    if pattern.mode is not PatternMode.STRICT:
        return None
    matching = _matching(pattern)
    rank = len(matching)
    multiplicity = pattern.n - rank
    if multiplicity < 2:
        return None
    logger.info(f"Pattern has structural rank {rank}; kernel multiplicity >= {multiplicity}")
    return ImpossibilityCertificate(
        kind=CertificateKind.RANK_DEFICIENCY,
        pattern=pattern,
        details=RankDeficiencyDetails(
            n=pattern.n,
            structural_rank=rank,
            kernel_multiplicity=multiplicity,
            matching=matching,
        ),
    )


def certify_power_equality(
    H: RationalMatrix,
    family: CommutantFamily,
    entry_pairs: Optional[Iterable[WitnessPair]] = None,
) -> Optional[ImpossibilityCertificate]:
    """
    Certificate that H is no polynomial in any member of an {aI + bC} family.

    Args:
        H: The filter
        family: Candidates, usually from commutant_with_pattern
        entry_pairs: 1-based position pairs to try; defaults to the witness
            scan order

    Returns:
        Optional[ImpossibilityCertificate]: None when the family is not of
            the form {aI + bC} or no pair separates H from the powers of C
    """
    generator = family.pencil_generator()
    if generator is None:
        return None
    n = generator.n
    powers = generator.powers(n)
    candidates = entry_pairs if entry_pairs is not None else witness_pair_candidates(n)
    for first, second in candidates:
        (i, j), (k, l) = (first[0] - 1, first[1] - 1), (second[0] - 1, second[1] - 1)
        if H[i, j] == H[k, l]:
            continue
        if all(power[i, j] == power[k, l] for power in powers):
            pair = (first, second)
            logger.info(f"Power-equality certificate at {pair}")
            return ImpossibilityCertificate(
                kind=CertificateKind.POWER_EQUALITY,
                pattern=family.pattern,
                details=PowerEqualityDetails(
                    generator=generator,
                    filter=H,
                    pair=pair,
                    powers=[(exponent, power[i, j], power[k, l]) for exponent, power in enumerate(powers)],
                    filter_values=(H[i, j], H[k, l]),
                ),
            )
    return None


def sample_weight(rng: np.random.Generator) -> Fraction:
    """k/16 with k uniform over [−64, 64] without 0."""
    return Fraction(int(rng.choice(WEIGHT_NUMERATORS)), WEIGHT_DENOMINATOR)


def random_weightings(pattern: SparsityPattern, samples: int, seed: int = 0) -> Iterator[RationalMatrix]:
    """Seeded pattern weightings; weighting i draws from SeedSequence([seed, i])."""
    entries = pattern.free_entries()
    for index in range(samples):
        rng = np.random.default_rng(np.random.SeedSequence([seed, index]))
        yield pattern.matrix_from_coordinates([sample_weight(rng) for _ in entries])


def replay_certificate(
    cert: ImpossibilityCertificate,
    samples: int = 1000,
    seed: int = 0,
) -> bool:
    """
    Re-verify every claim a certificate makes.

    Rank deficiency: the matching is valid for the pattern, no larger
    matching exists, and ``samples`` seeded random weightings all have
    deg m < n. Power equality: every recorded power equality and the
    filter inequality are recomputed exactly, and the generator commutes
    with the filter.
    """
    details = cert.details
    if isinstance(details, RankDeficiencyDetails):
        mask = cert.pattern.mask()
        rows = {row for row, _ in details.matching}
        columns = {column for _, column in details.matching}
        if len(rows) != len(details.matching) or len(columns) != len(details.matching):
            return False
        if not all(mask[row, column] for row, column in details.matching):
            return False
        if structural_rank(cert.pattern) != details.structural_rank:
            return False
        if details.n - details.structural_rank != details.kernel_multiplicity or details.kernel_multiplicity < 2:
            return False
        for index, weighting in enumerate(random_weightings(cert.pattern, samples, seed)):
            if min_poly(weighting).degree >= details.n:
                logger.warning(f"Weighting {index} is shift-enabled; certificate rejected")
                return False
        return True

    C, H = details.generator, details.filter
    (i, j), (k, l) = (details.pair[0][0] - 1, details.pair[0][1] - 1), (details.pair[1][0] - 1, details.pair[1][1] - 1)
    if (H[i, j], H[k, l]) != details.filter_values or H[i, j] == H[k, l]:
        return False
    if not (H @ C - C @ H).is_zero():
        return False
    powers = C.powers(C.n)
    if len(details.powers) != len(powers):
        return False
    for (_, first, second), power in zip(details.powers, powers):
        if power[i, j] != first or power[k, l] != second or first != second:
            return False
    return True
