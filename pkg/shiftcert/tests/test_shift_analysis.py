from fractions import Fraction

import numpy as np
import pytest

from shiftcert.algebra import Polynomial, RationalMatrix, eval_matrix_poly
from shiftcert.analysis import (
    commutes,
    construct_nonrepresentable_filter,
    filter_family_member,
    find_witness_pair,
    is_shift_enabled,
    pair_separates,
    represent_as_polynomial,
)
from shiftcert.analysis.invariance import witness_pair_candidates
from shiftcert.errors import DimensionMismatchError, NotSymmetricError, ShiftEnabledError
from shiftcert.graphs import complete_adjacency, directed_cycle_adjacency


# ============================================================================
# Shift-enabled decision
# ============================================================================


def test_star_is_not_shift_enabled(star, cfg):
    report = is_shift_enabled(star, cfg)
    assert not report.shift_enabled
    assert report.char_poly.degree == 5
    assert report.min_poly.degree == 3
    assert report.symmetric_cross_check is False
    assert report.cross_check_agrees


def test_loose_star_is_shift_enabled(loose_star, cfg):
    report = is_shift_enabled(loose_star, cfg)
    assert report.shift_enabled
    assert report.char_poly == report.min_poly
    assert report.cross_check_agrees


def test_directed_cycle_has_no_cross_check(cfg):
    report = is_shift_enabled(directed_cycle_adjacency(4), cfg)
    assert report.shift_enabled
    assert report.symmetric_cross_check is None
    assert report.decomposition is None
    assert report.cross_check_agrees is None


# ============================================================================
# Shift invariance and representability
# ============================================================================


def test_star_filter_is_annihilated_from_both_sides(star, star_filter):
    assert (star_filter @ star).is_zero()
    assert (star @ star_filter).is_zero()
    assert commutes(star_filter, star)


def test_star_filter_is_not_a_polynomial(star, star_filter):
    result = represent_as_polynomial(star_filter, star)
    assert not result.representable
    assert result.min_poly_degree == 3
    assert result.witness_pair == ((2, 3), (2, 4))
    assert result.verify(star_filter, star)


def test_witness_vector_annihilates_every_power(star, star_filter):
    result = represent_as_polynomial(star_filter, star)
    for power in star.powers(5):
        assert sum((y * v for y, v in zip(result.witness, power.vec())), Fraction(0)) == 0
    assert sum((y * v for y, v in zip(result.witness, star_filter.vec())), Fraction(0)) != 0


def test_star_filter_is_a_polynomial_in_the_loose_star(loose_star, star_filter):
    assert commutes(star_filter, loose_star)
    result = represent_as_polynomial(star_filter, loose_star)
    assert result.representable
    assert result.coefficients.degree <= 4
    assert eval_matrix_poly(result.coefficients, loose_star) == star_filter
    assert result.verify(star_filter, loose_star)


def test_cycle_witness_pair(cycle, cycle_filter):
    assert commutes(cycle_filter, cycle)
    assert find_witness_pair(cycle_filter, cycle) == ((1, 2), (1, 4))
    assert pair_separates(cycle_filter, cycle, ((1, 2), (1, 4)))
    assert not pair_separates(cycle_filter, cycle, ((1, 2), (1, 3)))


def test_polynomials_in_shift_enabled_matrix_are_recovered():
    """With I, S, S², S³ independent, the recovered h is the one used to build H."""
    S = directed_cycle_adjacency(4)
    h = Polynomial([Fraction(1, 2), -3, 0, 7])
    result = represent_as_polynomial(eval_matrix_poly(h, S), S)
    assert result.coefficients == h
    assert result.verify(eval_matrix_poly(h, S), S)


def test_non_commuting_filter_gets_a_certificate(star):
    H = complete_adjacency(5)
    assert not commutes(H, star)
    result = represent_as_polynomial(H, star)
    assert not result.representable
    assert result.verify(H, star)


def test_tampered_certificate_fails_verification(star, star_filter):
    result = represent_as_polynomial(star_filter, star)
    assert not result.verify(star, star)


def test_dimension_mismatch_is_reported(star, cycle):
    with pytest.raises(DimensionMismatchError):
        commutes(star, cycle)
    with pytest.raises(DimensionMismatchError):
        represent_as_polynomial(star, cycle)


def test_witness_pair_scan_starts_within_rows():
    candidates = list(witness_pair_candidates(3))
    assert candidates[0] == ((1, 2), (1, 3))
    assert candidates[1] == ((2, 1), (2, 3))
    assert len(candidates) == len(set(candidates)) == 9 * 8 // 2


# ============================================================================
# Filter construction
# ============================================================================


def test_constructed_filter_on_the_star(star, cfg):
    constructed = construct_nonrepresentable_filter(star, cfg)
    assert constructed.exact
    assert constructed.eigenvalue == 0
    assert constructed.eigenspace_dimension == 3
    H = constructed.matrix
    assert H.is_symmetric()
    assert commutes(H, star)
    assert not represent_as_polynomial(H, star).representable
    assert np.array_equal(constructed.values, H.to_numpy())


def test_constructed_filter_on_the_complete_graph(cfg):
    S = complete_adjacency(4)
    constructed = construct_nonrepresentable_filter(S, cfg)
    assert constructed.eigenvalue == -1
    assert commutes(constructed.matrix, S)
    assert not represent_as_polynomial(constructed.matrix, S).representable


def test_rational_eigenspace_wins_over_a_lower_irrational_one(cfg):
    """Two golden-ratio blocks repeat (1 ± √5)/2; the exact filter sits on the repeated 5 instead."""
    S = RationalMatrix(
        [
            [0, 1, 0, 0, 0, 0],
            [1, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 1, 1, 0, 0],
            [0, 0, 0, 0, 5, 0],
            [0, 0, 0, 0, 0, 5],
        ]
    )
    constructed = construct_nonrepresentable_filter(S, cfg)
    assert constructed.exact
    assert constructed.eigenvalue == 5
    assert constructed.eigenspace_dimension == 2
    assert commutes(constructed.matrix, S)
    assert not represent_as_polynomial(constructed.matrix, S).representable


def test_construction_refuses_shift_enabled_and_asymmetric_input(loose_star, cfg):
    with pytest.raises(ShiftEnabledError):
        construct_nonrepresentable_filter(loose_star, cfg)
    with pytest.raises(NotSymmetricError):
        construct_nonrepresentable_filter(directed_cycle_adjacency(4), cfg)


def test_filter_family_members(star, star_filter):
    """αH + q(S) commutes with S and is a polynomial in S only when α = 0."""
    q = Polynomial([1, 2, -1])
    member = filter_family_member(star, star_filter, Fraction(3, 4), q)
    assert commutes(member, star)
    assert not represent_as_polynomial(member, star).representable
    plain = filter_family_member(star, star_filter, 0, q)
    assert represent_as_polynomial(plain, star).representable
    assert plain == eval_matrix_poly(q, star)


def test_identity_is_always_representable(star):
    result = represent_as_polynomial(RationalMatrix.identity(5), star)
    assert result.coefficients == Polynomial([1])
