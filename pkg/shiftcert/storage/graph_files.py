"""
Reading graphs, filters and signals from text files.

Matrix files hold whitespace-separated rows. Edge lists hold one
``i j [weight]`` line per undirected edge with 1-based nodes and an
optional ``n <N>`` header. Blank lines and ``#`` comments are ignored in
both. Every number is parsed exactly.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from shiftcert.algebra.matrix import RationalMatrix, parse_rational
from shiftcert.errors import InputFormatError
from shiftcert.graphs import laplacian

logger = logging.getLogger(__name__)

EDGE_LIST_SUFFIXES = (".edges", ".edgelist")


class GraphSource(str, Enum):
    MATRIX = "matrix"
    EDGES = "edges"


class ShiftKind(str, Enum):
    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    CUSTOM = "custom"


@dataclass(frozen=True)
class GraphInput:
    """A parsed graph file: the matrix as written plus how to turn it into a shift."""

    path: str
    source: GraphSource
    n: int
    matrix: RationalMatrix
    shift_kind: ShiftKind = ShiftKind.ADJACENCY


def _tokens(line: str) -> list[tuple[int, str]]:
    """(1-based column, token) pairs, with any trailing comment removed."""
    body = line.split("#", 1)[0]
    result = []
    column = 0
    for token in body.split():
        column = body.index(token, column)
        result.append((column + 1, token))
        column += len(token)
    return result


def _parse_token(token: str, path: str, line: int, column: int) -> Fraction:
    try:
        return parse_rational(token)
    except ValueError as e:
        raise InputFormatError(str(e), path=path, line=line, column=column) from None


def parse_matrix_text(text: str, path: str = "<string>") -> RationalMatrix:
    """
    Parse a square matrix from whitespace-separated rows.

    Raises:
        InputFormatError: On a bad number, a ragged row or a non-square matrix
    """
    rows: list[list[Fraction]] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        tokens = _tokens(line)
        if not tokens:
            continue
        row = [_parse_token(token, path, line_number, column) for column, token in tokens]
        if rows and len(row) != len(rows[0]):
            raise InputFormatError(
                f"row has {len(row)} entries, expected {len(rows[0])}", path=path, line=line_number
            )
        rows.append(row)
    if not rows:
        raise InputFormatError("matrix file is empty", path=path)
    if len(rows) != len(rows[0]):
        raise InputFormatError(f"matrix is not square ({len(rows)}x{len(rows[0])})", path=path)
    return RationalMatrix(rows)


def parse_edge_list_text(text: str, path: str = "<string>", nodes: Optional[int] = None) -> RationalMatrix:
    """
    Parse a 1-based undirected edge list into a symmetric adjacency matrix.

    Args:
        text: File contents
        path: Name used in error messages
        nodes: Node count when the file has no ``n`` header

    Raises:
        InputFormatError: On malformed lines, out-of-range nodes, an unknown
            node count, or one edge listed twice with different weights
    """
    header: Optional[int] = None
    edges: dict[tuple[int, int], Fraction] = {}
    largest = 0
    for line_number, line in enumerate(text.splitlines(), start=1):
        tokens = _tokens(line)
        if not tokens:
            continue
        if tokens[0][1] == "n":
            if len(tokens) != 2 or header is not None or edges:
                raise InputFormatError("malformed 'n' header", path=path, line=line_number, column=tokens[0][0])
            count = _parse_token(tokens[1][1], path, line_number, tokens[1][0])
            if count.denominator != 1 or count < 1:
                raise InputFormatError("node count must be positive", path=path, line=line_number, column=tokens[1][0])
            header = int(count)
            continue
        if len(tokens) not in (2, 3):
            raise InputFormatError(
                f"expected 'i j [weight]', got {len(tokens)} fields", path=path, line=line_number, column=tokens[0][0]
            )
        ends = []
        for column, token in tokens[:2]:
            value = _parse_token(token, path, line_number, column)
            if value.denominator != 1 or value < 1:
                raise InputFormatError(f"node '{token}' is not a positive integer", path=path, line=line_number, column=column)
            ends.append(int(value))
        weight = _parse_token(tokens[2][1], path, line_number, tokens[2][0]) if len(tokens) == 3 else Fraction(1)
        key = (min(ends), max(ends))
        if key in edges and edges[key] != weight:
            raise InputFormatError("asymmetric edge list weights", path=path, line=line_number)
        edges[key] = weight
        largest = max(largest, key[1])

    n = header if header is not None else nodes
    if n is None:
        n = largest
    if n < 1:
        raise InputFormatError("edge list names no nodes; give an 'n' header or --nodes", path=path)
    if largest > n:
        raise InputFormatError(f"node {largest} exceeds the node count {n}", path=path)

    rows = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), weight in edges.items():
        rows[i - 1][j - 1] = weight
        rows[j - 1][i - 1] = weight
    return RationalMatrix(rows, symmetric=True)


def parse_graph(
    path: Union[str, Path],
    fmt: Optional[str] = None,
    nodes: Optional[int] = None,
    shift: Union[str, ShiftKind] = ShiftKind.ADJACENCY,
) -> GraphInput:
    """
    Read a graph file.

    Args:
        path: File to read
        fmt: "matrix" or "edges"; inferred from the extension when None
        nodes: Node count for edge lists without a header
        shift: How build_shift turns the matrix into a shift matrix

    Returns:
        GraphInput: The parsed matrix and its declared shift kind

    Raises:
        InputFormatError: If the file is malformed or the format is unknown
        OSError: If the file cannot be read
    """
    file_path = Path(path)
    if fmt is None:
        source = GraphSource.EDGES if file_path.suffix.lower() in EDGE_LIST_SUFFIXES else GraphSource.MATRIX
    else:
        try:
            source = GraphSource(fmt)
        except ValueError:
            raise InputFormatError(f"unknown graph format '{fmt}'", path=str(path)) from None
    try:
        kind = ShiftKind(shift)
    except ValueError:
        raise InputFormatError(f"unknown shift kind '{shift}'", path=str(path)) from None

    text = file_path.read_text(encoding="utf-8")
    if source is GraphSource.EDGES:
        matrix = parse_edge_list_text(text, str(path), nodes)
    else:
        matrix = parse_matrix_text(text, str(path))
    logger.debug(f"Read {matrix.n}-node graph from {path} ({source.value})")
    return GraphInput(path=str(path), source=source, n=matrix.n, matrix=matrix, shift_kind=kind)


def build_shift(graph: GraphInput) -> RationalMatrix:
    """Shift matrix for a parsed graph: the matrix itself, or D − A for LAPLACIAN."""
    if graph.shift_kind is ShiftKind.LAPLACIAN:
        return laplacian(graph.matrix)
    return graph.matrix


def read_matrix(path: Union[str, Path]) -> RationalMatrix:
    """Read a filter (or any square matrix) file."""
    return parse_matrix_text(Path(path).read_text(encoding="utf-8"), str(path))


def parse_vector(path: Union[str, Path]) -> list[Fraction]:
    """
    Read whitespace-separated rationals (signals, filter coefficients).

    Raises:
        InputFormatError: On a bad number or an empty file
    """
    values = []
    for line_number, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        for column, token in _tokens(line):
            values.append(_parse_token(token, str(path), line_number, column))
    if not values:
        raise InputFormatError("vector file is empty", path=str(path))
    return values


def write_matrix(matrix: RationalMatrix) -> str:
    """Matrix file text that parse_matrix_text reads back exactly."""
    return "".join(" ".join(str(value) for value in row) + "\n" for row in matrix.rows)
