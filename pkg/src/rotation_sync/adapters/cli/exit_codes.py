"""
Published process exit codes of the command-line tool.
"""
from enum import IntEnum

from pydantic import ValidationError

from rotation_sync.core.domain.errors import (
    DegenerateProjectionError,
    DimensionMismatchError,
    DisconnectedGraphError,
    DivergenceError,
    GraphInvariantError,
    InvalidConfigurationError,
    InvalidRotationError,
    ParseError,
    RejectionLimitError,
    SpectralGapError,
)


class ExitCode(IntEnum):
    """Stable exit status for every failure class."""

    OK = 0
    UNEXPECTED = 1
    USAGE = 2
    IO = 3
    PARSE = 4
    DISCONNECTED = 5
    SPECTRAL_GAP = 6
    DIVERGENCE = 7
    DEGENERATE_PROJECTION = 8
    REJECTION_LIMIT = 9
    DIMENSION_MISMATCH = 10


# Checked in order; ParseError precedes the other ValueError subclasses.
_ERROR_CODES: tuple[tuple[type[BaseException], ExitCode], ...] = (
    (ParseError, ExitCode.PARSE),
    (InvalidConfigurationError, ExitCode.USAGE),
    (ValidationError, ExitCode.USAGE),
    (InvalidRotationError, ExitCode.PARSE),
    (GraphInvariantError, ExitCode.PARSE),
    (DimensionMismatchError, ExitCode.DIMENSION_MISMATCH),
    (DisconnectedGraphError, ExitCode.DISCONNECTED),
    (SpectralGapError, ExitCode.SPECTRAL_GAP),
    (DivergenceError, ExitCode.DIVERGENCE),
    (DegenerateProjectionError, ExitCode.DEGENERATE_PROJECTION),
    (RejectionLimitError, ExitCode.REJECTION_LIMIT),
    (OSError, ExitCode.IO),
)


def exit_code_for(error: BaseException) -> ExitCode:
    """Map an exception to its published exit code."""
    for error_type, code in _ERROR_CODES:
        if isinstance(error, error_type):
            return code
    return ExitCode.UNEXPECTED
