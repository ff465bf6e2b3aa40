"""
Shared fixtures: the worked example matrices and a seeded corpus of
symmetric rational matrices.
"""

from fractions import Fraction

import numpy as np
import pytest

from shiftcert.algebra.matrix import RationalMatrix
from shiftcert.config import ToleranceConfig
from shiftcert.graphs import (
    cycle_adjacency,
    cycle_witness_filter,
    loose_star_shift,
    star_adjacency,
    star_witness_filter,
)

CORPUS_SIZE = 200
CORPUS_SEED = 20240917
MAX_CORPUS_N = 8


# ============================================================================
# Worked examples
# ============================================================================


@pytest.fixture
def cfg():
    return ToleranceConfig()


@pytest.fixture
def star():
    return star_adjacency()


@pytest.fixture
def star_filter():
    return star_witness_filter()


@pytest.fixture
def loose_star():
    return loose_star_shift()


@pytest.fixture
def cycle():
    return cycle_adjacency(4)


@pytest.fixture
def cycle_filter():
    return cycle_witness_filter()


# ============================================================================
# Seeded corpus
# ============================================================================


def random_symmetric(rng: np.random.Generator, n: int) -> RationalMatrix:
    """Entries k/16 with k uniform in [−64, 64]; zero is allowed so some entries vanish."""
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            value = Fraction(int(rng.integers(-64, 65)), 16)
            rows[i][j] = rows[j][i] = value
    return RationalMatrix(rows, symmetric=True)


def householder(v: list[int]) -> RationalMatrix:
    """I − 2vvᵀ/(vᵀv): symmetric, orthogonal and rational."""
    n = len(v)
    norm = sum(x * x for x in v)
    return RationalMatrix(
        [[(1 if i == j else 0) - Fraction(2 * v[i] * v[j], norm) for j in range(n)] for i in range(n)]
    )


def degenerate_symmetric(rng: np.random.Generator, n: int) -> RationalMatrix:
    """QDQᵀ with a repeated diagonal value in D and Q a product of two rational reflections."""
    distinct = [int(x) for x in rng.choice(np.arange(-6, 7), size=max(1, n - 1), replace=False)]
    values = distinct[: n - 1] + [distinct[0]]
    rng.shuffle(values)
    D = RationalMatrix.diagonal(values)
    Q = RationalMatrix.identity(n)
    for _ in range(2):
        v = [int(x) for x in rng.integers(-3, 4, size=n)]
        if not any(v):
            v[0] = 1
        Q = Q @ householder(v)
    return RationalMatrix((Q @ D @ Q.transpose()).rows, symmetric=True)


def build_corpus(size: int = CORPUS_SIZE, seed: int = CORPUS_SEED) -> list[RationalMatrix]:
    """Alternating generic and engineered-degenerate matrices with n cycling through 1..8."""
    rng = np.random.default_rng(seed)
    corpus = []
    for index in range(size):
        n = 1 + index % MAX_CORPUS_N
        if index % 2 == 1 and n >= 2:
            corpus.append(degenerate_symmetric(rng, n))
        else:
            corpus.append(random_symmetric(rng, n))
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture
def rng():
    return np.random.default_rng(7)
