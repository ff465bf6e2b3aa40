"""
Exception hierarchy for shiftcert.

Library code raises these; only the command-line layer turns them into
exit codes and messages.
"""

from typing import Optional


class ShiftCertError(Exception):
    """Base class for every error raised by shiftcert."""


class DimensionMismatchError(ShiftCertError, ValueError):
    """Operands have incompatible shapes."""


class NotSymmetricError(ShiftCertError, ValueError):
    """A symmetric matrix was required."""


class NotCommutingError(ShiftCertError, ValueError):
    """A filter was required to commute with the shift matrix."""


class ShiftEnabledError(ShiftCertError):
    """The shift matrix is shift-enabled, so the request has no answer."""


class ConvergenceError(ShiftCertError, ArithmeticError):
    """An iterative method hit its iteration cap."""


class DistinctnessError(ShiftCertError, ValueError):
    """Eigenvalues were required to be distinct."""


class ConfigurationError(ShiftCertError, ValueError):
    """Unknown tolerance profile or invalid configuration value."""


class ZeroPolynomialError(ShiftCertError, ZeroDivisionError):
    """Division by the zero polynomial."""


class InputFormatError(ShiftCertError, ValueError):
    """A graph, filter or signal file could not be parsed."""

    def __init__(
        self,
        message: str,
        path: Optional[str] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        self.path = path
        self.line = line
        self.column = column
        location = ""
        if path is not None:
            location += f"{path}:"
        if line is not None:
            location += f"{line}:"
            if column is not None:
                location += f"{column}:"
        super().__init__(f"{location} {message}" if location else message)
