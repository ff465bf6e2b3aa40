"""
Pattern-restricted commutants: every symmetric X with a given sparsity
pattern that commutes with a fixed filter H.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from shiftcert.algebra.elimination import nullspace_exact, solve_exact
from shiftcert.algebra.matrix import RationalMatrix, Scalar, _as_fraction
from shiftcert.conversion.structure import PatternMode, SparsityPattern
from shiftcert.errors import DimensionMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CommutantFamily:
    """
    Exact basis of {X symmetric, pattern-respecting : HX = XH}.

    ``coordinates`` holds each basis element's values on
    ``pattern.free_entries()``; ``H`` is None for families that were not
    derived from a filter (see ``pencil``).
    """

    pattern: SparsityPattern
    basis: list[RationalMatrix]
    coordinates: list[list[Fraction]] = field(default_factory=list)
    H: Optional[RationalMatrix] = None

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def particular(self) -> RationalMatrix:
        """The family is a linear space, so its particular solution is zero."""
        return RationalMatrix.zeros(self.pattern.n)

    @classmethod
    def pencil(cls, C: RationalMatrix) -> "CommutantFamily":
        """The two-dimensional family {aI + bC}."""
        pattern = SparsityPattern.from_matrix(C, PatternMode.LOOSE)
        return cls(pattern=pattern, basis=[RationalMatrix.identity(C.n), C])

    def member(self, coordinates: Sequence[Scalar]) -> RationalMatrix:
        """Σ cᵢ·Bᵢ over the basis."""
        if len(coordinates) != self.dimension:
            raise DimensionMismatchError(
                f"Family has dimension {self.dimension}, got {len(coordinates)} coordinates"
            )
        result = self.particular
        for c, element in zip(coordinates, self.basis):
            result = result + element * _as_fraction(c)
        return result

    def contains(self, matrix: RationalMatrix) -> bool:
        """Exact membership in the span of the basis."""
        if matrix.n != self.pattern.n:
            return False
        if not self.basis:
            return matrix.is_zero()
        columns = [element.vec() for element in self.basis]
        system = [list(row) for row in zip(*columns)]
        return solve_exact(system, matrix.vec()).consistent

    def pencil_generator(self) -> Optional[RationalMatrix]:
        """
        C with family = {aI + bC}, if the family has that form.

        C is normalized to a zero (1,1) entry and a leading nonzero entry
        of 1 in row-major order, so equal families give equal generators.
        """
        if self.dimension != 2:
            return None
        n = self.pattern.n
        identity = RationalMatrix.identity(n)
        columns = [element.vec() for element in self.basis]
        system = [list(row) for row in zip(*columns)]
        outcome = solve_exact(system, identity.vec())
        if not outcome.consistent:
            return None
        a1, a2 = outcome.solution
        generator = self.basis[0] if a2 != 0 else self.basis[1]
        generator = generator - identity * generator[0, 0]
        leading = next(value for value in generator.vec() if value != 0)
        return generator * (1 / leading)


def _unit(n: int, i: int, j: int) -> RationalMatrix:
    rows = [[0] * n for _ in range(n)]
    rows[i][j] = 1
    rows[j][i] = 1
    return RationalMatrix(rows)


def commutant_with_pattern(H: RationalMatrix, pattern: SparsityPattern) -> CommutantFamily:
    """
    Solve HX = XH over the free entries of a symmetric pattern.

    Args:
        H: Filter the family must commute with
        pattern: Support the members must respect (diagonal per its mode)

    Returns:
        CommutantFamily: Exact nullspace basis, one matrix per free coordinate

    Raises:
        DimensionMismatchError: If H and the pattern differ in size
    """
    if H.n != pattern.n:
        raise DimensionMismatchError(f"Filter is {H.n}x{H.n} but pattern has {pattern.n} nodes")
    free = pattern.free_entries()
    columns = []
    for i, j in free:
        unit = _unit(pattern.n, i, j)
        columns.append((H @ unit - unit @ H).vec())
    if columns:
        system = [list(row) for row in zip(*columns)]
        coordinates = nullspace_exact(system, columns=len(free))
    else:
        coordinates = []
    basis = [pattern.matrix_from_coordinates(vector) for vector in coordinates]
    logger.info(
        f"Commutant of H over a {pattern.mode.value} pattern with {len(free)} free entries "
        f"has dimension {len(basis)}"
    )
    return CommutantFamily(pattern=pattern, basis=basis, coordinates=coordinates, H=H)
