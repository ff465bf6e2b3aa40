"""
Pydantic schemas for report documents.

Every command writes one AnalysisReportDocument. Exact rationals are
strings ("p/q" or "p"); floats are strings with 17 significant digits, so a
document round-trips through JSON without loss.
"""

from typing import Optional

from pydantic import BaseModel, Field


# ============================================================================
# Building blocks
# ============================================================================


class PolynomialDoc(BaseModel):
    """Exact polynomial, ascending coefficients."""

    coefficients: list[str] = Field(..., description="Ascending coefficients as exact rationals")
    degree: int = Field(..., description="Degree; -1 for the zero polynomial")
    pretty: str = Field(..., description="Human-readable form in λ")


class FloatPolynomialDoc(BaseModel):
    """Floating polynomial, ascending coefficients."""

    coefficients: list[str] = Field(..., description="Ascending coefficients, 17 significant digits")


class MatrixDoc(BaseModel):
    """Exact square matrix."""

    n: int = Field(..., ge=1, description="Dimension")
    rows: list[list[str]] = Field(..., description="Row-major entries as exact rationals")


# ============================================================================
# Analysis sections
# ============================================================================


class ShiftEnabledSection(BaseModel):
    """Characteristic and minimal polynomial with the shift-enabled verdict."""

    n: int = Field(..., ge=1, description="Number of nodes")
    char_poly: PolynomialDoc = Field(..., description="det(λI − S)")
    min_poly: PolynomialDoc = Field(..., description="Monic minimal polynomial of S")
    shift_enabled: bool = Field(..., description="Whether the two polynomials coincide")
    symmetric_cross_check: Optional[bool] = Field(
        default=None,
        description="Eigenvalue-distinctness verdict (symmetric input only)",
    )
    eigenvalues: Optional[list[str]] = Field(
        default=None,
        description="Ascending floating eigenvalues (symmetric input only)",
    )


class CommutationSection(BaseModel):
    """Shift invariance of the filter."""

    commutes: bool = Field(..., description="Exact HS = SH")


class RepresentabilitySection(BaseModel):
    """Either h with H = h(S) or a non-representability certificate."""

    representable: bool = Field(..., description="Whether H is a polynomial in S")
    min_poly_degree: int = Field(..., description="Degree of the minimal polynomial of S")
    coefficients: Optional[PolynomialDoc] = Field(
        default=None,
        description="Lowest-degree h with H = h(S), when representable",
    )
    witness: Optional[list[str]] = Field(
        default=None,
        description="y with yᵀvec(Sᵏ) = 0 for all k and yᵀvec(H) ≠ 0",
    )
    witness_pair: Optional[list[list[int]]] = Field(
        default=None,
        description="Two 1-based positions where all powers of S agree and H differs",
    )


class ConversionSection(BaseModel):
    """Converted matrix S̃ and its audit."""

    epsilon: str = Field(..., description="Perturbation step actually used")
    S_tilde: list[list[str]] = Field(..., description="Converted shift matrix, row-major floats")
    original_eigenvalues: list[str] = Field(..., description="Eigenvalues of S in joint-basis order")
    perturbed_eigenvalues: list[str] = Field(..., description="Eigenvalues of S̃ in the same order")
    shift_enabled: bool = Field(..., description="Whether S̃ has distinct eigenvalues")
    commutes_with_H: bool = Field(..., description="HS̃ = S̃H within commute_tol")
    strict_same_graph: bool = Field(..., description="S̃ has exactly the support of S")
    loose_same_graph: bool = Field(..., description="S̃ has the support of S off the diagonal")
    recovery_poly: Optional[FloatPolynomialDoc] = Field(
        default=None,
        description="r with r(S̃) ≈ S, when S̃ is shift-enabled",
    )
    recovery_residual: Optional[str] = Field(default=None, description="max-abs of r(S̃) − S")
    density_original: str = Field(..., description="Nonzero fraction of S")
    density_converted: str = Field(..., description="Nonzero fraction of S̃ above zero_tol")


class CertificateDoc(BaseModel):
    """Impossibility certificate; which fields are set depends on ``kind``."""

    kind: str = Field(..., description="rank_deficiency or power_equality")
    summary: str = Field(..., description="One-line statement of what the certificate proves")
    structural_rank: Optional[int] = Field(default=None, description="Maximum matching size of the pattern")
    kernel_multiplicity: Optional[int] = Field(default=None, description="n minus the structural rank")
    matching: Optional[list[list[int]]] = Field(default=None, description="1-based (row, column) pairs")
    generator: Optional[MatrixDoc] = Field(default=None, description="C with family {aI + bC}")
    pair: Optional[list[list[int]]] = Field(default=None, description="Two 1-based positions compared")
    powers: Optional[list[list[str]]] = Field(default=None, description="(k, first entry, second entry)")
    filter_values: Optional[list[str]] = Field(default=None, description="H at the two positions")


class TrialDoc(BaseModel):
    """One seeded search trial."""

    index: int = Field(..., description="Trial number, also the second SeedSequence word")
    coordinates: list[str] = Field(..., description="Sampled weights as exact rationals")
    min_poly_degree: Optional[int] = Field(default=None, description="Degree of the candidate's minimal polynomial")
    realizes_pattern: bool = Field(..., description="Candidate support matches the pattern")
    accepted: bool = Field(..., description="Candidate is shift-enabled and realizes the pattern")


class SearchSection(BaseModel):
    """Pattern-search outcome and its full transcript."""

    mode: str = Field(..., description="strict or loose")
    trials: int = Field(..., description="Trial budget")
    seed: int = Field(..., description="Base seed")
    status: str = Field(..., description="found, impossible or not_found_after_trials")
    family_dimension: Optional[int] = Field(
        default=None,
        description="Dimension of the pattern commutant of H, when a filter was given",
    )
    matrix: Optional[MatrixDoc] = Field(default=None, description="Shift-enabled matrix found")
    certificate: Optional[CertificateDoc] = Field(default=None, description="Impossibility certificate")
    transcript: list[TrialDoc] = Field(default_factory=list, description="Trials in index order")


class LocalitySection(BaseModel):
    """Local polynomial filtering and its message cost."""

    hops: int = Field(..., description="Rounds of neighbour exchange")
    messages_per_round: int = Field(..., description="Directed messages per round")
    total_messages: int = Field(..., description="hops × messages_per_round")
    density: str = Field(..., description="Nonzero fraction of the shift matrix")
    converted_density: Optional[str] = Field(default=None, description="Nonzero fraction of S̃, when compared")
    output: list[str] = Field(..., description="Filtered signal")


# ============================================================================
# Document
# ============================================================================


class AnalysisReportDocument(BaseModel):
    """The report every command emits."""

    tool_version: str = Field(..., description="shiftcert version that produced the report")
    command: str = Field(..., description="Subcommand name")
    input_digest: str = Field(..., description="SHA-256 of the input files in argument order")
    shift_report: ShiftEnabledSection = Field(..., description="Shift-enabled analysis of S")
    commutation: Optional[CommutationSection] = Field(default=None, description="Set by invariance and represent")
    representability: Optional[RepresentabilitySection] = Field(default=None, description="Set by represent")
    conversion: Optional[ConversionSection] = Field(default=None, description="Set by convert")
    search: Optional[SearchSection] = Field(default=None, description="Set by search-pattern")
    locality: Optional[LocalitySection] = Field(default=None, description="Set by filter")
