"""Exception hierarchy shared by all modules.

Every error that reflects a violated precondition or an input outside an
operation's domain derives from DomainError, so the CLI can map the whole
family onto a single exit code.
"""

from __future__ import annotations


class SebaError(Exception):
    """Base class for all package errors."""


class DomainError(SebaError, ValueError):
    """An argument violates the documented domain of an operation."""


class UnfactoredError(SebaError):
    """Factorization gave up within its budget; no count is returned."""

    def __init__(self, n: int, message: str | None = None):
        self.n = n
        super().__init__(message or f"could not factor {n} within budget")


class CapacityError(SebaError):
    """The request exceeds the configured memory/enumeration budget."""


class NearSingularError(DomainError):
    """lambda is too close to a spectral point for a stable evaluation."""

    def __init__(self, lam: float, offending: float, margin: float):
        self.lam = lam
        self.offending = offending
        self.margin = margin
        super().__init__(
            f"lambda={lam!r} is within {margin:g} of the spectral point "
            f"{offending!r}; evaluation would be near-singular"
        )


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""

    def __init__(self, message: str, residue: float | None = None):
        self.residue = residue
        super().__init__(message)


class RangeError(DomainError):
    """A parameter falls outside an admissible interval."""

    def __init__(self, name: str, value: float, lo: float, hi: float,
                 lo_open: bool = True, hi_open: bool = False):
        self.lo = lo
        self.hi = hi
        lb = "(" if lo_open else "["
        rb = ")" if hi_open else "]"
        super().__init__(
            f"{name}={value!r} outside admissible interval {lb}{lo:g}, {hi:g}{rb}"
        )


class EmptyWindowError(DomainError):
    """A window that must contain data is empty."""
