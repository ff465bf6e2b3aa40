import numpy as np
import pytest

from shiftcert.algebra.matrix import RationalMatrix
from shiftcert.config import ToleranceConfig
from shiftcert.errors import ConvergenceError, DimensionMismatchError, NotCommutingError, NotSymmetricError
from shiftcert.graphs import complete_adjacency, directed_cycle_adjacency
from shiftcert.spectral import (
    eigenvalue_clusters,
    floating_commutes,
    has_distinct_eigenvalues,
    joint_diagonalize,
    joint_diagonalizer,
    normalize_signs,
    relative_commutator,
    require_orthonormal,
    symm_eig,
)


# ============================================================================
# Jacobi eigendecomposition
# ============================================================================


def test_star_eigenvalues(star, cfg):
    decomposition = symm_eig(star, cfg)
    assert np.allclose(decomposition.eigenvalues, [-2, 0, 0, 0, 2], atol=1e-9)
    assert not has_distinct_eigenvalues(decomposition, cfg)


def test_cycle_eigenvalues(cycle, cfg):
    decomposition = symm_eig(cycle, cfg)
    assert np.max(np.abs(decomposition.eigenvalues - np.array([-2.0, 0.0, 0.0, 2.0]))) <= 1e-9


def test_eigenpairs_are_orthonormal(loose_star, cfg):
    decomposition = symm_eig(loose_star, cfg)
    array = loose_star.to_numpy()
    assert decomposition.orthogonality_error() <= cfg.orth_tol
    assert np.max(decomposition.eigen_residuals(array)) <= 1e-8
    assert has_distinct_eigenvalues(decomposition, cfg)


def test_matches_numpy_on_random_symmetric(rng, cfg):
    """numpy's eigvalsh is an independent floating oracle."""
    for n in range(1, 9):
        a = rng.normal(size=(n, n))
        a = (a + a.T) / 2
        decomposition = symm_eig(a, cfg)
        assert np.allclose(decomposition.eigenvalues, np.linalg.eigvalsh(a), atol=1e-9)


def test_one_by_one_needs_no_sweeps(cfg):
    decomposition = symm_eig(RationalMatrix([[7]]), cfg)
    assert decomposition.sweeps == 0
    assert decomposition.eigenvalues.tolist() == [7.0]
    assert decomposition.T.tolist() == [[1.0]]


def test_signs_are_normalized(star, cfg):
    vectors = symm_eig(star, cfg).vectors
    for column in range(vectors.shape[1]):
        significant = vectors[np.abs(vectors[:, column]) > cfg.resid_tol, column]
        assert significant[0] > 0


def test_normalize_signs_flips_columns():
    vectors = np.array([[-1.0, 0.0], [0.0, -1.0]])
    assert normalize_signs(vectors, 1e-12).tolist() == [[1.0, 0.0], [0.0, 1.0]]


def test_symm_eig_rejects_asymmetric_input(cfg):
    with pytest.raises(NotSymmetricError):
        symm_eig(directed_cycle_adjacency(3), cfg)
    with pytest.raises(NotSymmetricError):
        symm_eig(np.array([[0.0, 1.0], [0.0, 0.0]]), cfg)
    with pytest.raises(DimensionMismatchError):
        symm_eig(np.zeros((2, 3)), cfg)


def test_eigenvalue_clusters():
    values = np.array([-2.0, 0.0, 1e-9, 2e-9, 2.0])
    assert eigenvalue_clusters(values, 1e-6) == [[0], [1, 2, 3], [4]]
    assert eigenvalue_clusters(np.array([]), 1e-6) == []


# ============================================================================
# Joint diagonalization
# ============================================================================


def test_joint_diagonalization_of_star_and_filter(star, star_filter, cfg):
    joint = joint_diagonalize(star, star_filter, cfg)
    T = joint.T
    assert np.max(np.abs(T.T @ T - np.eye(5))) <= cfg.orth_tol
    for matrix in (star.to_numpy(), star_filter.to_numpy()):
        rotated = T.T @ matrix @ T
        assert np.max(np.abs(rotated - np.diag(np.diag(rotated)))) <= 1e-8
    assert np.allclose(joint.s_values, [-2, 0, 0, 0, 2], atol=1e-9)
    assert [len(cluster) for cluster in joint.clusters] == [1, 3, 1]
    assert np.allclose(sorted(joint.h_values), [0, 0, 0, 0, 2], atol=1e-9)


def test_joint_diagonalizer_on_cycle(cycle, cycle_filter, cfg):
    T = joint_diagonalizer(cycle, cycle_filter, cfg)
    rotated = T.T @ cycle_filter.to_numpy() @ T
    assert np.max(np.abs(rotated - np.diag(np.diag(rotated)))) <= 1e-8


def test_joint_diagonalization_requires_commuting_inputs(star, cfg):
    with pytest.raises(NotCommutingError):
        joint_diagonalize(star, complete_adjacency(5), cfg)


def test_relative_commutator_is_zero_for_polynomials(cycle):
    s = cycle.to_numpy()
    assert relative_commutator(s @ s + 3 * s, s) == 0.0
    assert relative_commutator(np.diag([1.0, 2.0, 3.0, 4.0]), s) > 0.1


def test_floating_commutes_is_exact_for_rational_pairs(star, star_filter, cycle):
    assert floating_commutes(star_filter, star)
    assert not floating_commutes(cycle, RationalMatrix.diagonal([1, 2, 3, 4]))
    with pytest.raises(DimensionMismatchError):
        floating_commutes(star, cycle)


def test_joint_diagonalization_rotates_a_repeated_eigenspace(cfg):
    """S = I leaves the whole plane free; H = antidiag(1, 1) needs a 45° rotation."""
    S = RationalMatrix.diagonal([1, 1])
    H = RationalMatrix([[0, 1], [1, 0]])
    joint = joint_diagonalize(S, H, cfg)
    assert joint.clusters == [[0, 1]]
    assert np.allclose(np.abs(joint.T), np.full((2, 2), 1 / np.sqrt(2)), atol=1e-12)
    assert np.allclose(joint.h_values, [-1.0, 1.0], atol=1e-12)
    assert np.allclose(joint.s_values, [1.0, 1.0], atol=1e-12)


def test_joint_diagonalization_with_identity_filter(star, cfg):
    T = joint_diagonalizer(star, RationalMatrix.identity(5), cfg)
    assert np.allclose(T.T @ np.eye(5) @ T, np.eye(5), atol=1e-12)
    rotated = T.T @ star.to_numpy() @ T
    assert np.max(np.abs(rotated - np.diag(np.diag(rotated)))) <= 1e-8


# ============================================================================
# Orthonormality
# ============================================================================


def test_require_orthonormal(cfg):
    assert require_orthonormal(np.eye(3), cfg) == 0.0
    rotation = np.array([[np.cos(0.3), -np.sin(0.3)], [np.sin(0.3), np.cos(0.3)]])
    assert require_orthonormal(rotation, cfg) <= cfg.orth_tol
    with pytest.raises(ConvergenceError, match="orthogonality"):
        require_orthonormal(np.array([[1.0, 0.5], [0.0, 1.0]]), cfg)


def test_eigenbases_respect_orth_tol(star, star_filter, cfg):
    tight = ToleranceConfig(orth_tol=1e-11, resid_tol=1e-11, eig_sep_tol=1e-7, commute_tol=1e-11)
    assert symm_eig(star, tight).orthogonality_error() <= tight.orth_tol
    assert require_orthonormal(joint_diagonalizer(star, star_filter, cfg), cfg) <= cfg.orth_tol
