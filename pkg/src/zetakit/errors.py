"""Exception hierarchy shared by every zetakit module.

The CLI maps these onto exit codes: :class:`DomainError` (and subclasses)
to 3, :class:`NonConvergenceError` to 4.
"""

from __future__ import annotations

from typing import Any


class ZetaKitError(Exception):
    """Base class for all library errors."""


class DomainError(ZetaKitError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation at a pole (Gamma at non-positive integers, zeta at 1)."""


class BranchCutError(DomainError):
    """Argument lies on a branch cut of the principal branch."""


class SingularPointError(DomainError):
    """Argument is a singular point of the function (e.g. phi at x = 1)."""


class MethodUnavailableError(DomainError):
    """No evaluation method is valid for the requested arguments."""


class CapacityError(DomainError):
    """Request exceeds a configured table size."""


class NumericOverflowError(DomainError, OverflowError):
    """Result is not representable as a finite double."""


class NonConvergenceError(ZetaKitError, ArithmeticError):
    """An iterative method hit its budget before reaching tolerance.

    ``best`` carries the best available estimate (usually a QuadResult).
    """

    def __init__(self, message: str, best: Any = None):
        super().__init__(message)
        self.best = best
