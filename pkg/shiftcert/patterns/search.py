"""
Seeded search for a shift-enabled matrix with a prescribed sparsity pattern.

The two certificate detectors run first. When neither applies, candidates
are sampled (from the commutant of H when a filter is given, otherwise from
all pattern-respecting symmetric matrices) and tested exactly.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

import numpy as np

from shiftcert.algebra.matrix import RationalMatrix
from shiftcert.algebra.minimal import min_poly
from shiftcert.analysis.invariance import commutes
from shiftcert.conversion.structure import PatternMode, SparsityPattern
from shiftcert.patterns.certificates import (
    ImpossibilityCertificate,
    certify_power_equality,
    certify_rank_deficiency,
    sample_weight,
)
from shiftcert.patterns.commutant import CommutantFamily, commutant_with_pattern

logger = logging.getLogger(__name__)


class SearchStatus(str, Enum):
    FOUND = "found"
    NOT_FOUND_AFTER_TRIALS = "not_found_after_trials"
    IMPOSSIBLE = "impossible"


@dataclass(frozen=True)
class TrialRecord:
    """One sampled candidate. min_poly_degree is None when the sample lost pattern support."""

    index: int
    coordinates: list[Fraction]
    min_poly_degree: Optional[int]
    realizes_pattern: bool
    accepted: bool


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    matrix: Optional[RationalMatrix] = None
    certificate: Optional[ImpossibilityCertificate] = None
    transcript: list[TrialRecord] = field(default_factory=list)
    family_dimension: Optional[int] = None

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND


def _run_trial(
    index: int,
    seed: int,
    pattern: SparsityPattern,
    family: Optional[CommutantFamily],
    H: Optional[RationalMatrix],
) -> tuple[TrialRecord, RationalMatrix]:
    rng = np.random.default_rng(np.random.SeedSequence([seed, index]))
    if family is not None:
        coordinates = [sample_weight(rng) for _ in range(family.dimension)]
        candidate = family.member(coordinates)
    else:
        coordinates = [sample_weight(rng) for _ in pattern.free_entries()]
        candidate = pattern.matrix_from_coordinates(coordinates)

    realizes = pattern.is_realized_by(candidate)
    degree = None
    accepted = False
    if realizes:
        degree = min_poly(candidate).degree
        accepted = degree == pattern.n and (H is None or commutes(H, candidate))
    record = TrialRecord(
        index=index,
        coordinates=coordinates,
        min_poly_degree=degree,
        realizes_pattern=realizes,
        accepted=accepted,
    )
    return record, candidate


def exists_shift_enabled_with_pattern(
    pattern: SparsityPattern,
    H: Optional[RationalMatrix] = None,
    trials: int = 100,
    seed: int = 0,
    workers: int = 1,
) -> SearchOutcome:
    """
    Look for a shift-enabled symmetric matrix with the given pattern.

    Args:
        pattern: Required support (strict or loose)
        H: Optional filter the matrix must commute with
        trials: Number of random candidates before giving up
        seed: Generator seed; trial i draws from the stream (seed, i)
        workers: Threads evaluating trials; the transcript does not depend on it

    Returns:
        SearchOutcome: FOUND with a matrix, IMPOSSIBLE with a certificate,
            or NOT_FOUND_AFTER_TRIALS (inconclusive)
    """
    if pattern.mode is PatternMode.STRICT:
        certificate = certify_rank_deficiency(pattern)
        if certificate is not None:
            return SearchOutcome(status=SearchStatus.IMPOSSIBLE, certificate=certificate)

    family = None
    if H is not None:
        family = commutant_with_pattern(H, pattern)
        certificate = certify_power_equality(H, family)
        if certificate is not None:
            return SearchOutcome(
                status=SearchStatus.IMPOSSIBLE,
                certificate=certificate,
                family_dimension=family.dimension,
            )
        if family.dimension == 0:
            logger.info("Commutant is trivial; nothing to sample")
            return SearchOutcome(status=SearchStatus.NOT_FOUND_AFTER_TRIALS, family_dimension=0)

    dimension = family.dimension if family is not None else None
    transcript: list[TrialRecord] = []
    batch = max(1, workers)
    with ThreadPoolExecutor(max_workers=batch) as executor:
        for start in range(0, trials, batch):
            indices = range(start, min(start + batch, trials))
            if batch == 1:
                results = [_run_trial(index, seed, pattern, family, H) for index in indices]
            else:
                results = list(executor.map(lambda i: _run_trial(i, seed, pattern, family, H), indices))
            for record, candidate in results:
                transcript.append(record)
                logger.debug(
                    f"Trial {record.index}: realizes={record.realizes_pattern}, "
                    f"deg m={record.min_poly_degree}"
                )
                if record.accepted:
                    logger.info(f"Found a shift-enabled matrix at trial {record.index}")
                    return SearchOutcome(
                        status=SearchStatus.FOUND,
                        matrix=candidate,
                        transcript=transcript,
                        family_dimension=dimension,
                    )

    logger.info(f"No shift-enabled matrix after {trials} trials")
    return SearchOutcome(
        status=SearchStatus.NOT_FOUND_AFTER_TRIALS,
        transcript=transcript,
        family_dimension=dimension,
    )
