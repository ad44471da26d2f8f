"""Exception types shared across the toolkit."""

from __future__ import annotations


class StarkitError(Exception):
    """Base class for every error raised by this package."""


class ParseError(StarkitError):
    """Malformed textual graph input."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte {offset})"
        super().__init__(message)
        self.offset = offset


class SizeError(StarkitError):
    """Input exceeds a configured size limit."""


class UnknownNameError(StarkitError):
    """Requested corpus graph does not exist."""


class SingularMatrixError(StarkitError):
    """Matrix inversion failed; for a co-star block this means the chosen
    eigenvalue belongs to the spectrum of the candidate star complement."""


class NotAnEigenvalueError(StarkitError):
    """The supplied rational is not an eigenvalue of the graph."""


class NotAStarSetError(StarkitError):
    """The supplied vertex set fails the star-set criteria."""


class ZeroPivotError(StarkitError):
    """Requested pivot entry is zero, so the exchange is not basic."""


class CapExceededError(StarkitError):
    """Enumeration found more star sets than the configured cap allows."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class UnsupportedSpectrumError(StarkitError):
    """Operation needs an all-rational spectrum and the graph has
    irrational eigenvalues."""


class IncompleteCatalogError(StarkitError):
    """Invariants are global extrema/counts; a capped (incomplete) catalog
    cannot produce them."""


class SizeLimitError(StarkitError):
    """Graph too large for the exact isomorphism backtracker."""


class PreconditionViolatedError(StarkitError):
    """A named hypothesis of a structural check does not hold."""


class NotSRGError(StarkitError):
    """Graph is not strongly regular in the strict sense required here."""


class IrrationalSpectrumError(StarkitError):
    """Check needs every eigenvalue involved to be rational."""


class IsolatedVertexError(StarkitError):
    """Result is only guaranteed for graphs without isolated vertices."""
