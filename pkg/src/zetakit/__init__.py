"""zetakit: globally convergent zeta series, polylogarithms and the parametrized zeta Z(s, x).

``BACKEND`` names the kernel in use for the binary128 alternating sums:
"compiled" (Cython extension) or "python" (mpmath fallback). Set
ZETAKIT_BACKEND=python before import to force the fallback.
"""

from ._backend import BACKEND
from .core_numeric import gamma, principal_log, principal_pow, reciprocal_gamma
from .errors import (
    BranchCutError,
    CapacityError,
    DomainError,
    MethodUnavailableError,
    NonConvergenceError,
    NumericOverflowError,
    PoleError,
    SingularPointError,
    ZetaKitError,
)
from .finite_sums import delta_sum, s_sum, s_tilde_sum
from .param_zeta import z_closed_form, z_value
from .polylog import hurwitz_zeta, phi, polylog
from .zeta_engine import SeriesSpec, convergence_report, zeta_reference, zeta_via_series
from .zero_lab import critical_zeros, functional_ratio, ratio_scan

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BranchCutError",
    "CapacityError",
    "DomainError",
    "MethodUnavailableError",
    "NonConvergenceError",
    "NumericOverflowError",
    "PoleError",
    "SeriesSpec",
    "SingularPointError",
    "ZetaKitError",
    "convergence_report",
    "critical_zeros",
    "delta_sum",
    "functional_ratio",
    "gamma",
    "hurwitz_zeta",
    "phi",
    "polylog",
    "principal_log",
    "principal_pow",
    "ratio_scan",
    "reciprocal_gamma",
    "s_sum",
    "s_tilde_sum",
    "z_closed_form",
    "z_value",
    "zeta_reference",
    "zeta_via_series",
]
