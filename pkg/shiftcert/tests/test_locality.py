from fractions import Fraction

import numpy as np
import pytest
from numpy.polynomial import Polynomial as FloatPolynomial

from shiftcert.algebra import Polynomial, eval_matrix_poly
from shiftcert.conversion import convert_to_shift_enabled
from shiftcert.errors import DimensionMismatchError
from shiftcert.graphs import directed_cycle_adjacency
from shiftcert.locality import (
    GraphSignal,
    apply_filter_locally,
    compare_locality,
    matrix_density,
    shift_signal,
)


@pytest.fixture
def signal():
    return GraphSignal.from_values([1, -2, Fraction(1, 3), 0, 5])


def test_star_square_filter(star, signal):
    """h(λ) = λ² costs two rounds of the star's eight directed messages."""
    output, report = apply_filter_locally(star, Polynomial([0, 0, 1]), signal)
    assert output.exact
    assert list(output.values) == (star @ star).apply(list(signal.values))
    assert report.hops == 2
    assert report.messages_per_round == 8
    assert report.total_messages == 16
    assert report.density == pytest.approx(8 / 25)


def test_local_filter_matches_dense_evaluation(loose_star, signal):
    h = Polynomial([Fraction(1, 2), -1, 0, 3])
    output, report = apply_filter_locally(loose_star, h, signal)
    assert list(output.values) == eval_matrix_poly(h, loose_star).apply(list(signal.values))
    assert report.hops == 3


def test_zero_filter(star, signal):
    output, report = apply_filter_locally(star, Polynomial(), signal)
    assert all(v == 0 for v in output.values)
    assert report.hops == 0
    assert report.total_messages == 0


def test_signal_length_is_checked(star):
    with pytest.raises(DimensionMismatchError):
        apply_filter_locally(star, Polynomial([1]), [1, 2, 3])
    with pytest.raises(DimensionMismatchError):
        shift_signal(star, [1])


def test_directed_cycle_shift_is_a_delay():
    shifted = shift_signal(directed_cycle_adjacency(4), [1, 2, 3, 4])
    assert list(shifted.values) == [4, 1, 2, 3]


def test_floating_path_uses_support_above_zero_tol(star, signal):
    noisy = star.to_numpy()
    noisy[3, 4] = noisy[4, 3] = 1e-12
    output, report = apply_filter_locally(noisy, FloatPolynomial([0.0, 1.0]), signal)
    assert not output.exact
    assert np.allclose(output.values, star.to_numpy() @ signal.to_numpy())
    assert report.messages_per_round == 8
    assert matrix_density(noisy) == pytest.approx(8 / 25)


def test_converted_shift_costs_more_messages(star, star_filter, signal, cfg):
    outcome = convert_to_shift_enabled(star, star_filter, cfg=cfg)
    h = Polynomial([1, 1])
    comparison = compare_locality(star, outcome.S_tilde, h, signal)
    assert comparison.converted.messages_per_round > comparison.original.messages_per_round
    assert comparison.density_ratio > 1.5
    assert comparison.original.converted_density == comparison.converted.density
    assert comparison.original.hops == comparison.converted.hops == 1
    assert np.allclose(
        comparison.converted_output.values,
        (np.eye(5) + outcome.S_tilde) @ signal.to_numpy(),
    )
