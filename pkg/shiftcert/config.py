"""
Numerical tolerances and environment-driven configuration.

Exact computations need no tolerances; every floating decision (eigenvalue
distinctness, joint diagonalization residuals, commutation of converted
matrices, support detection) reads them from a ToleranceConfig.
"""

import logging
import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

from shiftcert.errors import ConfigurationError

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

PROFILE_ENV_VAR = "SHIFTCERT_TOLERANCE_PROFILE"
ZERO_TOL_ENV_VAR = "SHIFTCERT_ZERO_TOL"
LOG_LEVEL_ENV_VAR = "SHIFTCERT_LOG_LEVEL"

DEFAULT_ZERO_TOL = 1e-7
JACOBI_SWEEP_CAP = 100


class ToleranceConfig(BaseModel):
    """Tolerances for the floating-point side of the toolkit."""

    orth_tol: float = Field(
        default=1e-9,
        gt=0,
        description="Max-abs deviation of TᵀT from the identity",
    )
    resid_tol: float = Field(
        default=1e-9,
        gt=0,
        description="Eigen-residual bound and Jacobi off-diagonal stopping mass",
    )
    eig_sep_tol: float = Field(
        default=1e-6,
        gt=0,
        description="Minimum gap for two eigenvalues to count as distinct",
    )
    commute_tol: float = Field(
        default=1e-9,
        gt=0,
        description="Relative Frobenius bound for floating commutation",
    )

    model_config = {"frozen": True}


TOLERANCE_PROFILES: dict[str, ToleranceConfig] = {
    "default": ToleranceConfig(),
    "tight": ToleranceConfig(
        orth_tol=1e-11, resid_tol=1e-11, eig_sep_tol=1e-7, commute_tol=1e-11
    ),
    "relaxed": ToleranceConfig(
        orth_tol=1e-7, resid_tol=1e-7, eig_sep_tol=1e-5, commute_tol=1e-7
    ),
}


def get_tolerance_config(profile: Optional[str] = None) -> ToleranceConfig:
    """
    Resolve a tolerance profile.

    Args:
        profile: Profile name; falls back to SHIFTCERT_TOLERANCE_PROFILE, then "default"

    Returns:
        ToleranceConfig: The named profile

    Raises:
        ConfigurationError: If the profile name is unknown
    """
    name = profile or os.getenv(PROFILE_ENV_VAR) or "default"
    try:
        return TOLERANCE_PROFILES[name]
    except KeyError:
        known = ", ".join(sorted(TOLERANCE_PROFILES))
        raise ConfigurationError(
            f"Unknown tolerance profile '{name}' (known: {known})"
        ) from None


def get_zero_tol() -> float:
    """Support threshold for floating matrices, overridable by SHIFTCERT_ZERO_TOL."""
    raw = os.getenv(ZERO_TOL_ENV_VAR)
    if raw is None:
        return DEFAULT_ZERO_TOL
    try:
        value = float(raw)
    except ValueError:
        raise ConfigurationError(f"{ZERO_TOL_ENV_VAR} must be a number, got '{raw}'") from None
    if value <= 0:
        raise ConfigurationError(f"{ZERO_TOL_ENV_VAR} must be positive, got {value}")
    return value


def get_log_level() -> str:
    """Log level name for the command-line entry point."""
    return os.getenv(LOG_LEVEL_ENV_VAR, "WARNING").upper()
