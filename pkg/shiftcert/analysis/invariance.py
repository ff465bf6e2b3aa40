"""
Shift invariance and polynomial representability of filters.

A filter H is shift-invariant when HS = SH. It is representable when
H = h(S) for some polynomial h; when it is not, the result carries an exact
certificate that anyone can replay.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional

from shiftcert.algebra.elimination import solve_exact
from shiftcert.algebra.matrix import RationalMatrix
from shiftcert.algebra.minimal import eval_matrix_poly, min_poly
from shiftcert.algebra.polynomial import Polynomial
from shiftcert.errors import DimensionMismatchError

logger = logging.getLogger(__name__)

Position = tuple[int, int]
WitnessPair = tuple[Position, Position]


def commutes(H: RationalMatrix, S: RationalMatrix) -> bool:
    """
    Exact test HS − SH = 0.

    Raises:
        DimensionMismatchError: If H and S differ in size
    """
    if H.n != S.n:
        raise DimensionMismatchError(f"Filter is {H.n}x{H.n} but shift matrix is {S.n}x{S.n}")
    return (H @ S - S @ H).is_zero()


@dataclass(frozen=True)
class RepresentabilityResult:
    """
    Either h with H = h(S), or a certificate that no such h exists.

    Attributes:
        min_poly_degree: d = deg m_S; the basis is I, S, ..., S^(d−1)
        coefficients: h (degree < d) when representable
        witness: y with yᵀvec(Sᵏ) = 0 for all k and yᵀvec(H) ≠ 0
        witness_pair: 1-based positions where every Sᵏ agrees but H does not
    """

    min_poly_degree: int
    coefficients: Optional[Polynomial] = None
    witness: Optional[list[Fraction]] = None
    witness_pair: Optional[WitnessPair] = None

    @property
    def representable(self) -> bool:
        return self.coefficients is not None

    def verify(self, H: RationalMatrix, S: RationalMatrix) -> bool:
        """Replay the defining exact equations of this result against (H, S)."""
        if self.coefficients is not None:
            return (
                self.coefficients.degree < self.min_poly_degree
                and eval_matrix_poly(self.coefficients, S) == H
            )
        if self.witness is None:
            return False
        h_vec = H.vec()
        pairing = sum((y * v for y, v in zip(self.witness, h_vec)), Fraction(0))
        if pairing == 0:
            return False
        for power in S.powers(self.min_poly_degree):
            if sum((y * v for y, v in zip(self.witness, power.vec())), Fraction(0)) != 0:
                return False
        if self.witness_pair is not None:
            return pair_separates(H, S, self.witness_pair)
        return True


def _scan_order(n: int) -> Iterator[WitnessPair]:
    """Same-row off-diagonal pairs (row-major), then every other pair lexicographically (0-based)."""
    seen: set[WitnessPair] = set()
    for i in range(n):
        columns = [j for j in range(n) if j != i]
        for j, k in combinations(columns, 2):
            pair = ((i, j), (i, k))
            seen.add(pair)
            yield pair
    positions = [(i, j) for i in range(n) for j in range(n)]
    for first, second in combinations(positions, 2):
        if (first, second) not in seen:
            yield first, second


def witness_pair_candidates(n: int) -> Iterator[WitnessPair]:
    """Candidate position pairs in scan order, 1-based."""
    for (i, j), (k, l) in _scan_order(n):
        yield (i + 1, j + 1), (k + 1, l + 1)


def pair_separates(H: RationalMatrix, S: RationalMatrix, pair: WitnessPair) -> bool:
    """
    True iff Sᵏ agrees at both 1-based positions for k = 0..n−1 while H differs.

    Agreement for k < n covers every power by Cayley–Hamilton.
    """
    (i, j), (k, l) = ((pair[0][0] - 1, pair[0][1] - 1), (pair[1][0] - 1, pair[1][1] - 1))
    if H[i, j] == H[k, l]:
        return False
    return all(power[i, j] == power[k, l] for power in S.powers(S.n))


def find_witness_pair(H: RationalMatrix, S: RationalMatrix) -> Optional[WitnessPair]:
    """
    First pair of entries on which every power of S agrees but H differs.

    Returns:
        Optional[WitnessPair]: 1-based ((i, j), (i', j')), or None
    """
    if H.n != S.n:
        raise DimensionMismatchError(f"Filter is {H.n}x{H.n} but shift matrix is {S.n}x{S.n}")
    powers = S.powers(S.n)
    for (i, j), (k, l) in _scan_order(S.n):
        if H[i, j] == H[k, l]:
            continue
        if all(power[i, j] == power[k, l] for power in powers):
            return (i + 1, j + 1), (k + 1, l + 1)
    return None


def represent_as_polynomial(H: RationalMatrix, S: RationalMatrix) -> RepresentabilityResult:
    """
    Solve vec(H) = Σ_{k<d} c_k vec(Sᵏ) exactly, d = deg m_S.

    Args:
        H: Candidate filter (need not commute with S)
        S: Shift matrix

    Returns:
        RepresentabilityResult: Coefficients of h, or a witness vector and
            (when one exists) a witness pair

    Raises:
        DimensionMismatchError: If H and S differ in size
    """
    if H.n != S.n:
        raise DimensionMismatchError(f"Filter is {H.n}x{H.n} but shift matrix is {S.n}x{S.n}")
    degree = min_poly(S).degree
    columns = [power.vec() for power in S.powers(degree)]
    krylov = [list(row) for row in zip(*columns)]
    outcome = solve_exact(krylov, H.vec())

    if outcome.consistent:
        coefficients = Polynomial(outcome.solution)
        logger.info(f"Filter is representable: h(λ) = {coefficients.pretty()}")
        return RepresentabilityResult(min_poly_degree=degree, coefficients=coefficients)

    pair = find_witness_pair(H, S)
    logger.info(f"Filter is not representable in S (witness pair {pair})")
    return RepresentabilityResult(
        min_poly_degree=degree,
        witness=outcome.certificate,
        witness_pair=pair,
    )
