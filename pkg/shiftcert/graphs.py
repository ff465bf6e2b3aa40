"""
Catalog of the worked example graphs and filters.

Nodes are 1-based in the docstrings below (matching the edge-list file
format) and 0-based in the matrices.
"""

from fractions import Fraction

from shiftcert.algebra.matrix import RationalMatrix


def star_adjacency(leaves: int = 4) -> RationalMatrix:
    """Star with hub node 1 and nodes 2..leaves+1 as leaves."""
    n = leaves + 1
    return RationalMatrix(
        [[1 if (i == 0) != (j == 0) else 0 for j in range(n)] for i in range(n)],
        symmetric=True,
    )


def star_witness_filter() -> RationalMatrix:
    """(e₂ − e₃)(e₂ − e₃)ᵀ: annihilated by the 5-node star from both sides."""
    return RationalMatrix(
        [
            [0, 0, 0, 0, 0],
            [0, 1, -1, 0, 0],
            [0, -1, 1, 0, 0],
            [0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0],
        ],
        symmetric=True,
    )


def loose_star_shift() -> RationalMatrix:
    """Star with self loops of weight 1 on nodes 2 and 3; shift-enabled and commuting with the star witness."""
    return RationalMatrix(
        [
            [0, 1, 1, 1, 1],
            [1, 1, 0, 0, 0],
            [1, 0, 1, 0, 0],
            [1, 0, 0, 0, 0],
            [1, 0, 0, 0, 0],
        ],
        symmetric=True,
    )


def cycle_adjacency(n: int = 4) -> RationalMatrix:
    """Undirected n-cycle 1-2-...-n-1."""
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        j = (i + 1) % n
        if i != j:
            rows[i][j] = rows[j][i] = 1
    return RationalMatrix(rows, symmetric=True)


def cycle_witness_filter() -> RationalMatrix:
    """Shift-invariant filter on the 4-cycle that is not a polynomial in it."""
    return RationalMatrix(
        [
            [0, 0, -1, 1],
            [0, -1, 1, 0],
            [-1, 1, 0, 0],
            [1, 0, 0, -1],
        ],
        symmetric=True,
    )


def directed_cycle_adjacency(n: int) -> RationalMatrix:
    """
    Directed n-cycle with A[i][i−1] = 1, so (A·x)ᵢ = x_{i−1}.

    Multiplying a signal by it is the circular delay.
    """
    return RationalMatrix(
        [[1 if j == (i - 1) % n else 0 for j in range(n)] for i in range(n)]
    )


def complete_adjacency(n: int) -> RationalMatrix:
    return RationalMatrix(
        [[0 if i == j else 1 for j in range(n)] for i in range(n)], symmetric=True
    )


def laplacian(adjacency: RationalMatrix) -> RationalMatrix:
    """
    Combinatorial Laplacian D − A.

    Self loops contribute their weight to the degree and cancel on the
    diagonal, matching the usual convention for weighted graphs.
    """
    n = adjacency.n
    degrees = [sum(adjacency.rows[i], Fraction(0)) for i in range(n)]
    return RationalMatrix.diagonal(degrees) - adjacency
