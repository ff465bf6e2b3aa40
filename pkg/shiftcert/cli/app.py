"""
Command-line interface for shiftcert.

Every analysis command reads graph/filter/signal files and writes one JSON
report document to stdout (or --out). Logs go to stderr.

Exit codes: 0 on success, 1 for a negative verdict under --strict-exit
(and for any failing verify-paper item), 2 for input errors.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from shiftcert import __version__
from shiftcert.algebra.matrix import RationalMatrix
from shiftcert.algebra.polynomial import Polynomial
from shiftcert.analysis.invariance import commutes, represent_as_polynomial
from shiftcert.analysis.shift_enabled import is_shift_enabled
from shiftcert.cli.reproduction import format_results, run_reproduction
from shiftcert.config import ToleranceConfig, get_log_level, get_tolerance_config, get_zero_tol
from shiftcert.conversion.convert import PerturbationPolicy, convert_to_shift_enabled
from shiftcert.conversion.structure import PatternMode, SparsityPattern
from shiftcert.errors import ConfigurationError, ShiftCertError
from shiftcert.locality.filtering import apply_filter_locally
from shiftcert.patterns.search import SearchStatus, exists_shift_enabled_with_pattern
from shiftcert.schemas import AnalysisReportDocument, CommutationSection
from shiftcert.storage.graph_files import build_shift, parse_graph, parse_vector, read_matrix
from shiftcert.storage.reports import (
    conversion_section,
    digest_inputs,
    locality_section,
    representability_section,
    search_section,
    shift_section,
    write_report,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--profile", default=None, help="Tolerance profile (default, tight, relaxed)")
    common.add_argument("--out", default=None, help="Write the report here instead of stdout")
    common.add_argument("--strict-exit", action="store_true", help="Exit 1 on a negative verdict")
    common.add_argument("--log-level", default=None, help="Logging level (default from SHIFTCERT_LOG_LEVEL)")
    common.add_argument(
        "--shift",
        choices=["adjacency", "laplacian", "custom"],
        default="adjacency",
        help="How the graph file becomes a shift matrix",
    )
    common.add_argument("--format", dest="fmt", choices=["matrix", "edges"], default=None, help="Graph file format")
    common.add_argument("--nodes", type=int, default=None, help="Node count for edge lists without a header")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="shiftcert",
        description="Shift-enabled graph shift matrices, filter representability and conversion audits.",
    )
    parser.add_argument("--version", action="version", version=f"shiftcert {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", parents=[common], help="Shift-enabled report")
    analyze.add_argument("graph")

    invariance = commands.add_parser("invariance", parents=[common], help="Does the filter commute with S?")
    invariance.add_argument("graph")
    invariance.add_argument("filter")

    represent = commands.add_parser("represent", parents=[common], help="Is the filter a polynomial in S?")
    represent.add_argument("graph")
    represent.add_argument("filter")

    convert = commands.add_parser("convert", parents=[common], help="Eigenvalue-perturbation conversion and audit")
    convert.add_argument("graph")
    convert.add_argument("filter")
    convert.add_argument("--epsilon", type=float, default=None, help="Perturbation step (default 1e-3·(1+ρ))")

    search = commands.add_parser("search-pattern", parents=[common], help="Shift-enabled matrix with the graph's pattern?")
    search.add_argument("graph")
    search.add_argument("--filter", dest="filter_path", default=None, help="Filter the matrix must commute with")
    search.add_argument("--mode", choices=["strict", "loose"], default="strict")
    search.add_argument("--trials", type=int, default=100)
    search.add_argument("--seed", type=int, default=0)
    search.add_argument("--workers", type=int, default=1)

    filtering = commands.add_parser("filter", parents=[common], help="Local polynomial filtering")
    filtering.add_argument("graph")
    filtering.add_argument("coeffs", help="Ascending filter coefficients")
    filtering.add_argument("signal")

    commands.add_parser("verify-paper", parents=[common], help="Reproduce every worked example")

    dot = commands.add_parser("export-dot", parents=[common], help="Graph structure in DOT format")
    dot.add_argument("graph")
    return parser


def _emit(document: AnalysisReportDocument, out: Optional[str]) -> None:
    text = write_report(document, out)
    if out is None:
        sys.stdout.write(text)


def _load_shift(args: argparse.Namespace) -> RationalMatrix:
    return build_shift(parse_graph(args.graph, fmt=args.fmt, nodes=args.nodes, shift=args.shift))


def _document(args: argparse.Namespace, S: RationalMatrix, cfg: ToleranceConfig, paths: Sequence[str]) -> AnalysisReportDocument:
    return AnalysisReportDocument(
        tool_version=__version__,
        command=args.command,
        input_digest=digest_inputs(paths),
        shift_report=shift_section(is_shift_enabled(S, cfg)),
    )


def export_dot(matrix: RationalMatrix) -> str:
    """DOT text: undirected for symmetric matrices, directed otherwise; 1-based node names."""
    symmetric = matrix.is_symmetric()
    keyword, arrow = ("graph", "--") if symmetric else ("digraph", "->")
    lines = [f"{keyword} G {{"]
    for i in range(matrix.n):
        lines.append(f"  {i + 1};")
    for i in range(matrix.n):
        for j in range(i if symmetric else 0, matrix.n):
            weight = matrix[i, j]
            if weight != 0:
                lines.append(f'  {i + 1} {arrow} {j + 1} [label="{weight}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def run(args: argparse.Namespace) -> int:
    """Execute a parsed command; returns the exit code."""
    cfg = get_tolerance_config(args.profile)

    if args.command == "verify-paper":
        results = run_reproduction(cfg)
        sys.stdout.write(format_results(results))
        return EXIT_OK if all(item.passed for item in results) else EXIT_NEGATIVE

    S = _load_shift(args)

    if args.command == "export-dot":
        text = export_dot(S)
        if args.out is not None:
            Path(args.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
        return EXIT_OK

    if args.command == "analyze":
        document = _document(args, S, cfg, [args.graph])
        _emit(document, args.out)
        negative = not document.shift_report.shift_enabled

    elif args.command in ("invariance", "represent"):
        H = read_matrix(args.filter)
        document = _document(args, S, cfg, [args.graph, args.filter])
        commuting = commutes(H, S)
        document.commutation = CommutationSection(commutes=commuting)
        negative = not commuting
        if args.command == "represent":
            result = represent_as_polynomial(H, S)
            document.representability = representability_section(result)
            negative = not result.representable
        _emit(document, args.out)

    elif args.command == "convert":
        H = read_matrix(args.filter)
        try:
            policy = PerturbationPolicy(epsilon=args.epsilon, zero_tol=get_zero_tol())
        except ValidationError as e:
            raise ConfigurationError(f"invalid perturbation policy: {e.errors()[0]['msg']}") from None
        outcome = convert_to_shift_enabled(S, H, policy, cfg)
        document = _document(args, S, cfg, [args.graph, args.filter])
        document.conversion = conversion_section(outcome)
        _emit(document, args.out)
        negative = not outcome.strict_same_graph

    elif args.command == "search-pattern":
        paths = [args.graph]
        H = None
        if args.filter_path is not None:
            H = read_matrix(args.filter_path)
            paths.append(args.filter_path)
        pattern = SparsityPattern.from_matrix(S, PatternMode(args.mode))
        outcome = exists_shift_enabled_with_pattern(
            pattern, H=H, trials=args.trials, seed=args.seed, workers=args.workers
        )
        document = _document(args, S, cfg, paths)
        document.search = search_section(outcome, args.mode, args.trials, args.seed)
        _emit(document, args.out)
        negative = outcome.status is not SearchStatus.FOUND

    elif args.command == "filter":
        h = Polynomial(parse_vector(args.coeffs))
        x = parse_vector(args.signal)
        output, report = apply_filter_locally(S, h, x, get_zero_tol())
        document = _document(args, S, cfg, [args.graph, args.coeffs, args.signal])
        document.locality = locality_section(output, report)
        _emit(document, args.out)
        negative = False

    else:
        raise ConfigurationError(f"unknown command '{args.command}'")

    return EXIT_NEGATIVE if (args.strict_exit and negative) else EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point for the ``shiftcert`` console script."""
    parser = build_parser()
    args = parser.parse_args(argv)

    level = (args.log_level or get_log_level()).upper()
    if level not in LOG_LEVELS:
        sys.stderr.write(f"shiftcert: error: unknown log level '{level}'\n")
        return EXIT_INPUT_ERROR
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    try:
        return run(args)
    except (ShiftCertError, OSError) as e:
        logger.debug("Command failed", exc_info=True)
        sys.stderr.write(f"shiftcert: error: {e}\n")
        return EXIT_INPUT_ERROR
