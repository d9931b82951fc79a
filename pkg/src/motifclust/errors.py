"""Exception hierarchy shared across the package."""


class MotifClustError(Exception):
    """Base class for all package errors."""


class ParseError(MotifClustError):
    """Malformed input data.  Carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownMotifError(MotifClustError):
    """Requested motif name is not recognized."""


class CapabilityError(MotifClustError):
    """Request exceeds a deliberate size guard (e.g. motif too large)."""


class DomainError(MotifClustError):
    """Operation called outside its mathematical domain (empty set, zero volume, ...)."""


class DisconnectedError(DomainError):
    """Spectral step received a disconnected matrix."""


class ConvergenceError(MotifClustError):
    """Iterative eigensolver failed to reach the requested tolerance."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class DatasetMissingError(MotifClustError):
    """A packaged-dataset file is not present on disk."""
