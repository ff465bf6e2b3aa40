from fractions import Fraction

import pytest

from shiftcert.algebra import (
    Polynomial,
    RationalMatrix,
    brackets_root,
    char_poly,
    eval_matrix_poly,
    integer_normalize,
    krylov_rank,
    min_poly,
    nullspace_exact,
    parse_rational,
    poly_divides,
    rank_exact,
    rational_roots,
    solve_exact,
)
from shiftcert.errors import DimensionMismatchError, NotSymmetricError, ZeroPolynomialError
from shiftcert.graphs import complete_adjacency, directed_cycle_adjacency


# ============================================================================
# Parsing and matrix construction
# ============================================================================


@pytest.mark.parametrize(
    "token, expected",
    [
        ("3", Fraction(3)),
        ("-2/7", Fraction(-2, 7)),
        ("0.125", Fraction(1, 8)),
        ("1e-3", Fraction(1, 1000)),
        (" 4 / 6 ", Fraction(2, 3)),
    ],
)
def test_parse_rational_is_exact(token, expected):
    """Decimal and fraction literals parse without binary rounding."""
    assert parse_rational(token) == expected


@pytest.mark.parametrize("token", ["abc", "1/0", "inf", "nan", ""])
def test_parse_rational_rejects_bad_literals(token):
    with pytest.raises(ValueError):
        parse_rational(token)


def test_matrix_rejects_ragged_rows():
    with pytest.raises(DimensionMismatchError):
        RationalMatrix([[1, 2], [3]])


def test_matrix_symmetric_flag_is_checked():
    with pytest.raises(NotSymmetricError):
        RationalMatrix([[0, 1], [2, 0]], symmetric=True)


def test_matrix_refuses_inexact_floats():
    """Only integral floats may enter an exact matrix."""
    assert RationalMatrix([[2.0]])[0, 0] == 2
    with pytest.raises(TypeError):
        RationalMatrix([[0.1]])


def test_vec_round_trips_through_from_vec(star):
    assert RationalMatrix.from_vec(star.vec(), star.n) == star


# ============================================================================
# Polynomials
# ============================================================================


def test_polynomial_trims_trailing_zeros():
    p = Polynomial([1, 2, 0, 0])
    assert p.degree == 1
    assert Polynomial().degree == -1
    assert Polynomial([0, 0]).is_zero()


def test_polynomial_division_identity():
    """a = q·b + r with deg r < deg b."""
    a = Polynomial([1, -3, 0, 2, 5])
    b = Polynomial([2, 0, 1])
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_polynomial_pretty_form(star):
    assert char_poly(star).pretty() == "λ⁵ - 4λ³"
    assert Polynomial([Fraction(-1, 2), 0, 1]).pretty() == "λ² - 1/2"


def test_gcd_is_monic():
    a = Polynomial.from_roots([1, 2, 2]) * 3
    b = Polynomial.from_roots([2, 5])
    assert a.gcd(b) == Polynomial.from_roots([2])


def test_poly_divides():
    assert poly_divides(Polynomial([0, -4, 0, 1]), Polynomial([0, 0, 0, -4, 0, 1]))
    assert not poly_divides(Polynomial([1, 1]), Polynomial([1, 0, 1]))
    with pytest.raises(ZeroPolynomialError):
        poly_divides(Polynomial(), Polynomial([1]))


def test_rational_roots_with_multiplicities(star):
    assert rational_roots(char_poly(star)) == [(Fraction(-2), 1), (Fraction(0), 3), (Fraction(2), 1)]


def test_rational_roots_skip_irrational_factors():
    """λ³ − 2λ = λ(λ² − 2) has a single rational root."""
    assert rational_roots(Polynomial([0, -2, 0, 1])) == [(Fraction(0), 1)]


def test_rational_roots_of_non_monic_polynomial():
    p = Polynomial.from_roots([Fraction(1, 3), Fraction(-3, 2)]) * 6
    assert rational_roots(p) == [(Fraction(-3, 2), 1), (Fraction(1, 3), 1)]


def test_brackets_root_locates_irrational_roots():
    p = Polynomial([-2, 0, 1])
    assert brackets_root(p, 1.41421356, 1e-6)
    assert not brackets_root(p, 1.0, 0.1)
    assert brackets_root(p, Fraction(0), Fraction(0)) is False


# ============================================================================
# Elimination
# ============================================================================


def test_nullspace_basis_has_unit_free_entries():
    assert nullspace_exact([[1, 2, 3]]) == [
        [Fraction(-2), Fraction(1), Fraction(0)],
        [Fraction(-3), Fraction(0), Fraction(1)],
    ]


def test_integer_normalize():
    assert integer_normalize([Fraction(-1, 2), Fraction(1, 3)]) == [Fraction(3), Fraction(-2)]
    assert integer_normalize([Fraction(0), Fraction(0)]) == [Fraction(0), Fraction(0)]


def test_solve_exact_consistent_system():
    outcome = solve_exact([[1, 1], [1, -1]], [3, 1])
    assert outcome.consistent
    assert outcome.solution == [Fraction(2), Fraction(1)]
    assert outcome.homogeneous == []


def test_solve_exact_inconsistent_system_has_certificate():
    """yᵀA = 0 and yᵀb ≠ 0 proves that A·x = b has no solution."""
    outcome = solve_exact([[1, 1], [1, 1]], [1, 2])
    assert not outcome.consistent
    y = outcome.certificate
    assert y == [Fraction(1), Fraction(-1)]
    assert y[0] * 1 + y[1] * 2 != 0


def test_solve_exact_rejects_mismatched_rhs():
    with pytest.raises(DimensionMismatchError):
        solve_exact([[1, 0], [0, 1]], [1])


def test_rank_exact(star):
    assert rank_exact(star) == 2
    assert rank_exact(RationalMatrix.identity(3)) == 3


# ============================================================================
# Characteristic and minimal polynomials
# ============================================================================


def test_star_polynomials(star):
    """p = λ⁵ − 4λ³ but m = λ³ − 4λ, so the star is not shift-enabled."""
    assert char_poly(star) == Polynomial([0, 0, 0, -4, 0, 1])
    assert min_poly(star) == Polynomial([0, -4, 0, 1])


def test_cycle_polynomials(cycle):
    assert char_poly(cycle) == Polynomial([0, 0, -4, 0, 1])
    assert min_poly(cycle) == Polynomial([0, -4, 0, 1])


def test_directed_cycle_is_its_own_minimal_polynomial():
    S = directed_cycle_adjacency(4)
    assert char_poly(S) == Polynomial([-1, 0, 0, 0, 1])
    assert min_poly(S) == char_poly(S)
    assert krylov_rank(S) == 4


def test_one_by_one_matrix():
    S = RationalMatrix([[Fraction(3, 2)]])
    assert char_poly(S) == Polynomial([Fraction(-3, 2), 1])
    assert min_poly(S) == char_poly(S)


def test_scalar_matrix_has_linear_minimal_polynomial():
    S = RationalMatrix.identity(4) * 5
    assert min_poly(S) == Polynomial([-5, 1])
    assert char_poly(S) == Polynomial.from_roots([5, 5, 5, 5])


def test_complete_graph_minimal_polynomial():
    """K_n has eigenvalues n−1 (once) and −1 (n−1 times)."""
    S = complete_adjacency(5)
    assert min_poly(S) == Polynomial.from_roots([4, -1])
    assert krylov_rank(S) == 2


def test_minimal_polynomial_annihilates_and_divides(star, cycle, loose_star):
    for S in (star, cycle, loose_star):
        m = min_poly(S)
        assert m.is_monic()
        assert eval_matrix_poly(m, S).is_zero()
        assert poly_divides(m, char_poly(S))


def test_eval_matrix_poly_of_zero_polynomial(star):
    assert eval_matrix_poly(Polynomial(), star).is_zero()
    assert eval_matrix_poly(Polynomial([2]), star) == RationalMatrix.identity(5) * 2
