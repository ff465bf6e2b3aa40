"""
Turning analysis results into report documents and persisting them.
"""

import hashlib
import logging
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Union

import numpy as np

from shiftcert.algebra.matrix import RationalMatrix
from shiftcert.algebra.polynomial import Polynomial
from shiftcert.analysis.invariance import RepresentabilityResult
from shiftcert.analysis.shift_enabled import ShiftEnabledReport
from shiftcert.conversion.convert import ConversionOutcome
from shiftcert.locality.filtering import GraphSignal, LocalityReport
from shiftcert.patterns.certificates import ImpossibilityCertificate, RankDeficiencyDetails
from shiftcert.patterns.search import SearchOutcome
from shiftcert.schemas import (
    AnalysisReportDocument,
    CertificateDoc,
    ConversionSection,
    FloatPolynomialDoc,
    LocalitySection,
    MatrixDoc,
    PolynomialDoc,
    RepresentabilitySection,
    SearchSection,
    ShiftEnabledSection,
    TrialDoc,
)

logger = logging.getLogger(__name__)


def format_float(value: float) -> str:
    return format(float(value), ".17g")


def format_rational(value: Fraction) -> str:
    return str(value)


def format_value(value: Union[Fraction, float]) -> str:
    return format_rational(value) if isinstance(value, Fraction) else format_float(value)


def digest_inputs(paths: Iterable[Union[str, Path]]) -> str:
    """SHA-256 over the raw bytes of each file, in order."""
    h = hashlib.sha256()
    for path in paths:
        h.update(Path(path).read_bytes())
    return h.hexdigest()


def polynomial_doc(p: Polynomial) -> PolynomialDoc:
    return PolynomialDoc(coefficients=p.to_strings(), degree=p.degree, pretty=p.pretty())


def matrix_doc(matrix: RationalMatrix) -> MatrixDoc:
    return MatrixDoc(n=matrix.n, rows=[[format_rational(v) for v in row] for row in matrix.rows])


def _float_rows(array: np.ndarray) -> list[list[str]]:
    return [[format_float(v) for v in row] for row in array]


def shift_section(report: ShiftEnabledReport) -> ShiftEnabledSection:
    eigenvalues = None
    if report.decomposition is not None:
        eigenvalues = [format_float(v) for v in report.decomposition.eigenvalues]
    return ShiftEnabledSection(
        n=report.n,
        char_poly=polynomial_doc(report.char_poly),
        min_poly=polynomial_doc(report.min_poly),
        shift_enabled=report.shift_enabled,
        symmetric_cross_check=report.symmetric_cross_check,
        eigenvalues=eigenvalues,
    )


def representability_section(result: RepresentabilityResult) -> RepresentabilitySection:
    pair = None
    if result.witness_pair is not None:
        pair = [list(result.witness_pair[0]), list(result.witness_pair[1])]
    return RepresentabilitySection(
        representable=result.representable,
        min_poly_degree=result.min_poly_degree,
        coefficients=polynomial_doc(result.coefficients) if result.coefficients is not None else None,
        witness=[format_rational(v) for v in result.witness] if result.witness is not None else None,
        witness_pair=pair,
    )


def conversion_section(outcome: ConversionOutcome) -> ConversionSection:
    poly = outcome.recovery_poly
    residual = outcome.recovery_residual
    return ConversionSection(
        epsilon=format_float(outcome.epsilon),
        S_tilde=_float_rows(outcome.S_tilde),
        original_eigenvalues=[format_float(v) for v in outcome.original_eigenvalues],
        perturbed_eigenvalues=[format_float(v) for v in outcome.perturbed_eigenvalues],
        shift_enabled=outcome.shift_enabled,
        commutes_with_H=outcome.commutes_with_H,
        strict_same_graph=outcome.strict_same_graph,
        loose_same_graph=outcome.loose_same_graph,
        recovery_poly=FloatPolynomialDoc(coefficients=[format_float(c) for c in poly.coef]) if poly is not None else None,
        recovery_residual=format_float(residual) if residual is not None else None,
        density_original=format_float(outcome.density_original),
        density_converted=format_float(outcome.density_converted),
    )


def certificate_doc(cert: ImpossibilityCertificate) -> CertificateDoc:
    details = cert.details
    if isinstance(details, RankDeficiencyDetails):
        return CertificateDoc(
            kind=cert.kind.value,
            summary=cert.summary(),
            structural_rank=details.structural_rank,
            kernel_multiplicity=details.kernel_multiplicity,
            matching=[[row + 1, column + 1] for row, column in details.matching],
        )
    return CertificateDoc(
        kind=cert.kind.value,
        summary=cert.summary(),
        generator=matrix_doc(details.generator),
        pair=[list(details.pair[0]), list(details.pair[1])],
        powers=[[str(k), format_rational(a), format_rational(b)] for k, a, b in details.powers],
        filter_values=[format_rational(v) for v in details.filter_values],
    )


def search_section(outcome: SearchOutcome, mode: str, trials: int, seed: int) -> SearchSection:
    return SearchSection(
        mode=mode,
        trials=trials,
        seed=seed,
        status=outcome.status.value,
        family_dimension=outcome.family_dimension,
        matrix=matrix_doc(outcome.matrix) if outcome.matrix is not None else None,
        certificate=certificate_doc(outcome.certificate) if outcome.certificate is not None else None,
        transcript=[
            TrialDoc(
                index=record.index,
                coordinates=[format_rational(c) for c in record.coordinates],
                min_poly_degree=record.min_poly_degree,
                realizes_pattern=record.realizes_pattern,
                accepted=record.accepted,
            )
            for record in outcome.transcript
        ],
    )


def locality_section(output: GraphSignal, report: LocalityReport) -> LocalitySection:
    return LocalitySection(
        hops=report.hops,
        messages_per_round=report.messages_per_round,
        total_messages=report.total_messages,
        density=format_float(report.density),
        converted_density=format_float(report.converted_density) if report.converted_density is not None else None,
        output=[format_value(v) for v in output.values],
    )


def serialize_report(document: AnalysisReportDocument) -> str:
    return document.model_dump_json(indent=2) + "\n"


def load_report(text: str) -> AnalysisReportDocument:
    return AnalysisReportDocument.model_validate_json(text)


def write_report(document: AnalysisReportDocument, out: Optional[Union[str, Path]] = None) -> str:
    """Serialize a report, writing it to ``out`` when given; returns the text."""
    text = serialize_report(document)
    if out is not None:
        Path(out).write_text(text, encoding="utf-8")
        logger.info(f"Report written to {out}")
    return text
