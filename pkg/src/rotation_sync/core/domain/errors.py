"""
Exceptions raised by the rotation synchronization domain.

Every error derives from RotationSyncError so adapters can catch the whole
family; validation errors additionally derive from ValueError.
"""
from pathlib import Path
from typing import Optional, Union


class RotationSyncError(Exception):
    """Base class for all domain errors."""


def _located(message: str, path: Union[str, Path, None], line_number: Optional[int]) -> str:
    """Prefix a message with ``path:line: `` when a location is known."""
    if path is None:
        return message
    location = f"{path}" if line_number is None else f"{path}:{line_number}"
    return f"{location}: {message}"


class InvalidConfigurationError(RotationSyncError, ValueError):
    """A specification or solver configuration is out of range."""


class InvalidRotationError(RotationSyncError, ValueError):
    """A matrix or angle-axis pair does not describe a proper rotation."""


class GraphInvariantError(RotationSyncError, ValueError):
    """
    A view graph violates one of its structural invariants.

    Loaders pass the file and line that introduced the violation.
    """

    def __init__(self, message: str, path: Union[str, Path, None] = None,
                 line_number: Optional[int] = None):
        self.path = path
        self.line_number = line_number
        super().__init__(_located(message, path, line_number))


class DimensionMismatchError(RotationSyncError, ValueError):
    """Matrix shapes do not agree with the observed block matrix."""


class ParseError(RotationSyncError, ValueError):
    """A view graph or rotation file could not be parsed."""

    def __init__(self, message: str, path: Union[str, Path, None] = None,
                 line_number: Optional[int] = None):
        self.path = path
        self.line_number = line_number
        super().__init__(_located(message, path, line_number))


class DisconnectedGraphError(RotationSyncError):
    """The view graph has more than one connected component."""


class RejectionLimitError(RotationSyncError):
    """Rejection sampling never produced a connected graph."""


class DegenerateProjectionError(RotationSyncError):
    """The nearest rotation is not unique (rank-deficient input)."""


class SpectralGapError(RotationSyncError):
    """The matrix has no separated dominant eigenvalue triple."""


class DivergenceError(RotationSyncError):
    """Gradient descent blew up; the learning rate is too high for the instance."""
