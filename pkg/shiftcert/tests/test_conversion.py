import numpy as np
import pytest
from numpy.polynomial import Polynomial as FloatPolynomial
from pydantic import ValidationError

from shiftcert.conversion import (
    DEFAULT_POLICY_SET,
    PatternMode,
    PerturbationPolicy,
    SparsityPattern,
    convert_to_shift_enabled,
    describes_same_graph,
    eval_float_matrix_poly,
    recover_original,
)
from shiftcert.errors import DimensionMismatchError, DistinctnessError, NotCommutingError
from shiftcert.graphs import complete_adjacency, directed_cycle_adjacency


# ============================================================================
# Sparsity patterns and the same-graph relation
# ============================================================================


def test_star_pattern(star):
    strict = SparsityPattern.from_matrix(star, PatternMode.STRICT)
    assert strict.offdiag_support == frozenset({(0, 1), (0, 2), (0, 3), (0, 4)})
    assert strict.diagonal_support == frozenset()
    assert strict.free_entries() == [(0, 1), (0, 2), (0, 3), (0, 4)]
    loose = strict.with_mode(PatternMode.LOOSE)
    assert len(loose.free_entries()) == 9
    assert loose.free_entries()[0] == (0, 0)


def test_pattern_from_edges_matches_matrix(cycle):
    pattern = SparsityPattern.from_edges(4, [(0, 1), (2, 1), (2, 3), (3, 0)])
    assert pattern == SparsityPattern.from_matrix(cycle)


def test_pattern_rejects_pairs_outside_the_upper_triangle():
    with pytest.raises(DimensionMismatchError):
        SparsityPattern(n=3, offdiag_support=frozenset({(2, 1)}))
    with pytest.raises(DimensionMismatchError):
        SparsityPattern(n=3, offdiag_support=frozenset(), diagonal_support=frozenset({3}))


def test_matrix_from_coordinates(star):
    pattern = SparsityPattern.from_matrix(star)
    assert pattern.matrix_from_coordinates([1, 1, 1, 1]) == star
    assert pattern.is_realized_by(star)
    assert not pattern.is_realized_by(pattern.matrix_from_coordinates([1, 0, 1, 1]))
    with pytest.raises(DimensionMismatchError):
        pattern.matrix_from_coordinates([1, 2])


def test_loose_pattern_ignores_the_diagonal(star, loose_star):
    loose = SparsityPattern.from_matrix(star, PatternMode.LOOSE)
    assert loose.is_realized_by(loose_star)
    assert not SparsityPattern.from_matrix(star).is_realized_by(loose_star)
    assert np.count_nonzero(np.diag(loose.mask())) == 5


def test_same_graph_relation(star, loose_star):
    assert describes_same_graph(star, star, PatternMode.STRICT)
    assert not describes_same_graph(star, loose_star, PatternMode.STRICT)
    assert describes_same_graph(star, loose_star, PatternMode.LOOSE)


def test_same_graph_is_symmetric_in_its_arguments(star, loose_star):
    noisy = loose_star.to_numpy() + 1e-12
    pairs = [
        (star, loose_star),
        (star, complete_adjacency(5)),
        (star, noisy),
        (loose_star, noisy),
        (directed_cycle_adjacency(5), star),
    ]
    for A, B in pairs:
        for mode in PatternMode:
            assert describes_same_graph(A, B, mode) == describes_same_graph(B, A, mode)


def test_same_graph_needs_matching_symmetry():
    directed = directed_cycle_adjacency(3)
    both_ways = directed + directed.transpose()
    assert not describes_same_graph(directed, both_ways, PatternMode.LOOSE)


def test_same_graph_uses_zero_tol_for_floats(star):
    noisy = star.to_numpy() + 1e-12
    assert describes_same_graph(star, noisy, PatternMode.STRICT, zero_tol=1e-9)
    assert not describes_same_graph(star, noisy, PatternMode.STRICT, zero_tol=1e-15)


# ============================================================================
# Perturbation policy
# ============================================================================


def test_default_epsilon_follows_spectral_radius():
    assert PerturbationPolicy().resolve_epsilon(2.0) == pytest.approx(0.003)
    assert PerturbationPolicy(epsilon=0.01, epsilon_scale=10).resolve_epsilon(2.0) == pytest.approx(0.1)
    assert PerturbationPolicy.zero().resolve_epsilon(2.0) == 0.0


def test_policy_validation():
    with pytest.raises(ValidationError):
        PerturbationPolicy(epsilon=-1.0)
    with pytest.raises(ValidationError):
        PerturbationPolicy(epsilon_scale=-0.5)
    policy = PerturbationPolicy()
    with pytest.raises(ValidationError):
        policy.epsilon = 0.5


# ============================================================================
# Conversion and audit
# ============================================================================


def test_star_conversion(star, star_filter, cfg):
    outcome = convert_to_shift_enabled(star, star_filter, cfg=cfg)
    assert outcome.epsilon == pytest.approx(0.003)
    assert outcome.shift_enabled
    assert outcome.commutes_with_H
    assert not outcome.strict_same_graph
    assert outcome.recovery_residual <= 1e-6
    assert outcome.recovery.commutes
    assert np.allclose(sorted(outcome.perturbed_eigenvalues), [-2, 0, 0.003, 0.006, 2], atol=1e-9)
    assert np.max(np.abs(outcome.S_tilde - outcome.S_tilde.T)) == 0.0


def test_converted_star_is_denser(star, star_filter, cfg):
    outcome = convert_to_shift_enabled(star, star_filter, cfg=cfg)
    assert outcome.density_original == pytest.approx(8 / 25)
    assert outcome.density_converted > 0.6


def test_recovery_polynomial_reproduces_the_star(star, star_filter, cfg):
    outcome = convert_to_shift_enabled(star, star_filter, cfg=cfg)
    recovered = eval_float_matrix_poly(outcome.recovery_poly, outcome.S_tilde)
    assert np.max(np.abs(recovered - star.to_numpy())) <= 1e-6


def test_cycle_conversion_never_describes_the_cycle(cycle, cycle_filter, cfg):
    """Every default policy fills the cycle completely, diagonal included."""
    for policy in DEFAULT_POLICY_SET:
        outcome = convert_to_shift_enabled(cycle, cycle_filter, policy, cfg)
        assert outcome.shift_enabled
        assert outcome.commutes_with_H
        assert not outcome.strict_same_graph
        assert not outcome.loose_same_graph
        assert outcome.density_converted == pytest.approx(1.0)
        assert outcome.recovery_residual <= 1e-6


def test_zero_policy_is_the_identity_conversion(star, star_filter, cfg):
    outcome = convert_to_shift_enabled(star, star_filter, PerturbationPolicy.zero(), cfg)
    assert np.array_equal(outcome.S_tilde, star.to_numpy())
    assert not outcome.shift_enabled
    assert outcome.recovery is None
    assert outcome.strict_same_graph and outcome.loose_same_graph


def test_every_default_policy_converts_the_star(star, star_filter, cfg):
    for policy in DEFAULT_POLICY_SET:
        outcome = convert_to_shift_enabled(star, star_filter, policy, cfg)
        assert outcome.shift_enabled
        assert outcome.commutes_with_H
        assert not outcome.strict_same_graph


def test_shift_enabled_input_is_left_alone(loose_star, star_filter, cfg):
    outcome = convert_to_shift_enabled(loose_star, star_filter, cfg=cfg)
    assert np.array_equal(outcome.S_tilde, loose_star.to_numpy())
    assert outcome.strict_same_graph
    assert outcome.recovery_residual == 0.0


def test_conversion_requires_commuting_filter(star, cfg):
    with pytest.raises(NotCommutingError):
        convert_to_shift_enabled(star, complete_adjacency(5), cfg=cfg)


def test_recovery_needs_distinct_eigenvalues(star, cfg):
    with pytest.raises(DistinctnessError):
        recover_original(star, star.to_numpy(), cfg)


def test_recovery_flags_a_non_commuting_pair(loose_star, cfg):
    """K5 is not a polynomial in the loose star, so r(S̃) cannot land on it."""
    recovery = recover_original(complete_adjacency(5), loose_star.to_numpy(), cfg)
    assert recovery.commutes is False
    assert recovery.residual > 1e-6


def test_recovery_of_a_polynomial_image(loose_star, cfg):
    """S̃ = S² + S has distinct eigenvalues here, and r(S̃) = S is recovered."""
    s = loose_star.to_numpy()
    recovery = recover_original(loose_star, s @ s + s, cfg)
    assert recovery.commutes
    assert recovery.residual <= 1e-6


def test_eval_float_matrix_poly():
    m = np.array([[1.0, 2.0], [0.0, 3.0]])
    assert np.allclose(eval_float_matrix_poly(FloatPolynomial([1.0, 0.0, 2.0]), m), np.eye(2) + 2 * m @ m)
    assert np.array_equal(eval_float_matrix_poly(FloatPolynomial([0.0]), m), np.zeros((2, 2)))


def test_identity_recovery_is_exact(loose_star, cfg):
    recovery = recover_original(loose_star, loose_star.to_numpy(), cfg)
    assert recovery.residual == 0.0
    assert list(recovery.poly.coef) == [0.0, 1.0]
    assert len(recovery.pairs) == 5
