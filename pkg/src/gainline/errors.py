"""Exception hierarchy shared by every module."""


class GainLineError(Exception):
    """Base class for all errors raised by this package."""


class StructuralError(GainLineError, ValueError):
    """Malformed object: bad index, non-adjacent pair, mismatched shapes."""


class DomainError(GainLineError, ValueError):
    """Well-formed input outside an operation's domain (e.g. disconnected graph)."""


class ParseError(StructuralError):
    """Text input could not be parsed; carries the offending line number."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class InternalInconsistency(GainLineError, RuntimeError):
    """An invariant that the mathematics guarantees did not hold."""
