"""Exception hierarchy for mpalg.

Every error raised deliberately by the kernel derives from MpalgError so the
CLI can map it to a diagnostic and a usage exit code in one place.
"""

from __future__ import annotations

from typing import Optional


class MpalgError(Exception):
    """Base exception for mpalg.

    Attributes:
        message: Error description
        field: Name or path of the offending input, if known
    """

    def __init__(self, message: str, field: Optional[str] = None):
        self.message = message
        self.field = field
        if field:
            super().__init__(f"{field}: {message}")
        else:
            super().__init__(message)


class MalformedDiagramError(MpalgError, ValueError):
    """Raised when a diagram violates its weight or covering conditions."""


class BasisMismatchError(MpalgError, ValueError):
    """Raised when elements of different algebras or bases are combined."""


class ResourceLimitError(MpalgError):
    """Raised when a configured size cap would be exceeded."""

    def __init__(self, what: str, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"{what} of size {size} exceeds the configured cap {cap}")


class OracleDataError(MpalgError, ValueError):
    """Raised for inputs an oracle cannot be evaluated on."""


class IncompatibleTableauxError(MpalgError, ValueError):
    """Raised when a tableau pair cannot be fed to inverse RSK."""


class WireFormatError(MpalgError, ValueError):
    """Raised when JSON input fails validation."""
