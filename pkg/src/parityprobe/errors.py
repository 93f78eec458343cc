"""Exception hierarchy shared across the package.

Three failure categories are distinguished so that callers (notably the
command-line front end) can map them to distinct exit codes:

* :class:`DomainError` — invalid input values (validation failure).
* :class:`SingularityError` — a formula was evaluated at a point where it is
  genuinely singular (e.g. photon subtraction from zero squeezing).
* :class:`TruncationError` — a truncated Fock-space computation could not
  reach the requested accuracy with the given cutoff.
"""

from __future__ import annotations


class ParityProbeError(Exception):
    """Base class for all package-specific errors."""


class DomainError(ParityProbeError, ValueError):
    """An input value is outside the domain of the requested operation."""


class SingularityError(ParityProbeError, ArithmeticError):
    """The requested quantity is singular at the given parameter point."""


class TruncationError(ParityProbeError, ArithmeticError):
    """A Fock-space cutoff was too small for the requested accuracy."""

    def __init__(self, message: str, suggested_n_max: int | None = None):
        super().__init__(message)
        self.suggested_n_max = suggested_n_max
