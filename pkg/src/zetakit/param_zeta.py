"""The parametrized zeta function

    Z(s, x) = sum_{n>=1} S_n(s) x^(n+1)/(n+1) = -int_0^x Li_s(z/(z-1)) dz,

with Z(s, 1) = (s-1) zeta(s).

For real x in [0, 1] the integral is taken after z = 1 - e^-tau, which maps
z/(z-1) to 1 - e^tau and turns the log singularity at z = 1 into an
exponentially damped tail:

    Z(s, x) = -int_0^{tau_x} Li_s(1 - e^tau) e^-tau dtau,   tau_x = -log(1-x).

Complex x uses the straight segment [0, x].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Tuple

import numpy as np

from .core_numeric import is_nonpositive_integer, principal_log, principal_pow, reciprocal_gamma
from .errors import BranchCutError, DomainError, MethodUnavailableError, SingularPointError
from .finite_sums import s_sum, s_sum_asymptotic
from .polylog import POLYLOG_TOL, polylog, polylog_array
from .quadrature import QuadTolerance, integrate_finite, integrate_semi_infinite
from .special_numbers import PolynomialQ, eulerian_row
from .zeta_engine import zeta_reference

__all__ = [
    "ErrorTermEstimate",
    "ZEvalMethod",
    "error_term_probe",
    "log_ratio_L",
    "z_closed_form",
    "z_closed_form_polynomial",
    "z_series",
    "z_tail",
    "z_value",
    "zero_split_identity",
]

ZEvalMethod = Literal["series", "integral", "closed_form", "auto"]
_METHODS = ("series", "integral", "closed_form", "auto")

_OUTER_TOL = QuadTolerance(abs_tol=1e-13, rel_tol=1e-11, max_evaluations=20_000)
_CUT_GAP = 1e-12
_SERIES_TERMS = 200


@dataclass(frozen=True)
class ErrorTermEstimate:
    x: complex
    exact_tail: complex
    leading_asymptotic: complex
    ratio: complex


# ---------------------------------------------------------------- Li along the path


def _li_values(s: complex, args: np.ndarray) -> np.ndarray:
    """Li_s at many arguments: one vector quadrature when Re(s) > 0, pointwise otherwise."""
    if s.real > 0:
        return polylog_array(s, args)
    return np.array([polylog(s, complex(a)) for a in args], dtype=complex)


def _tau_integrand(s: complex):
    # Li_s(1 - e^tau) e^-tau
    def f(tau):
        tau = np.asarray(tau, dtype=float)
        return _li_values(s, -np.expm1(tau)) * np.exp(-tau)

    return f


def _tau_integral(s: complex, lo: float, hi: float) -> complex:
    """int_lo^hi Li_s(1 - e^tau) e^-tau dtau; hi may be inf."""
    f = _tau_integrand(s)
    if hi == math.inf:
        # Li_s(1-e^tau) grows like tau^s: start the doubling panels near the bulk
        res = integrate_semi_infinite(f, lo, _OUTER_TOL, decay_hint=1.0, first_panel=max(2.0, 4.0 - lo))
    else:
        if hi <= lo:
            return 0j
        res = integrate_finite(f, lo, hi, _OUTER_TOL)
    return complex(res.value)


def _segment_integral(s: complex, x: complex) -> complex:
    """int_0^x Li_s(z/(z-1)) dz on the straight segment."""

    def f(u):
        z = x * np.asarray(u, dtype=float)
        return _li_values(s, z / (z - 1.0)) * x

    return complex(integrate_finite(f, 0.0, 1.0, _OUTER_TOL).value)


def _check_integral_domain(x: complex) -> None:
    if x.imag == 0:
        if x.real > 1:
            raise BranchCutError("real x > 1 puts z/(z-1) on the cut")
        if x.real < 0:
            raise BranchCutError("the segment [0, x] for real x < 0 is excluded")
        return
    # z/(z-1) lies on [1, inf) exactly when z is real and > 1; the segment avoids it
    # unless x is within _CUT_GAP of the real axis beyond 1 or on the negative axis
    if abs(x.imag) < _CUT_GAP and (x.real > 1 - _CUT_GAP or x.real < 0):
        raise BranchCutError("x is too close to the excluded rays")


# ---------------------------------------------------------------- methods


def z_series(s, x, terms: int = _SERIES_TERMS) -> Tuple[complex, float]:
    """Truncated power series and a bound on the omitted tail.

    The bound takes |S_n| from its leading asymptotics at n = terms and sums
    |x|^(n+1)/(n+1) geometrically.
    """
    s = complex(s)
    x = complex(x)
    if abs(x) >= 1:
        raise DomainError("series form needs |x| < 1")
    if terms < 1:
        raise DomainError("terms must be positive")
    if is_nonpositive_integer(s):
        # S_n(-k) = 0 for n >= k + 2: the sum is a polynomial
        terms = min(terms, int(-s.real) + 1)
    acc = 0j
    xp = x
    for n in range(1, terms + 1):
        xp = xp * x
        acc += s_sum(n, s) * xp / (n + 1)
    if is_nonpositive_integer(s) or x == 0:
        return acc, 0.0
    r = abs(x)
    N = max(terms, 2)
    bound = abs(s_sum_asymptotic(N, s).predicted) * r ** (terms + 2) / ((terms + 2) * (1.0 - r))
    return acc, bound


@lru_cache(maxsize=None)
def z_closed_form_polynomial(k: int) -> PolynomialQ:
    """Z(-k, x) as an exact polynomial: (-1)^k int_0^x sum_j A(k,j) z^(j+1) (z-1)^(k-j) dz."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    integrand = [Fraction(0)] * (k + 3)
    for j, a in enumerate(eulerian_row(k)):
        # z^(j+1) (z-1)^(k-j), expanded binomially
        e = k - j
        for i in range(e + 1):
            integrand[j + 1 + i] += a * math.comb(e, i) * (-1) ** (e - i)
    sign = -1 if k % 2 else 1
    return PolynomialQ([sign * c for c in integrand]).integral()


def z_closed_form(s, x) -> complex:
    """Z(s, x) for integer s in [-8, 2] from elementary functions and Li_2."""
    s = complex(s)
    if s.imag != 0 or s.real != math.floor(s.real) or not -8 <= s.real <= 2:
        raise MethodUnavailableError("closed forms exist for integer s in [-8, 2]")
    k = int(s.real)
    if k <= 0:
        x_in = x if isinstance(x, (int, Fraction)) else complex(x)
        return complex(z_closed_form_polynomial(-k)(x_in))
    x = complex(x)
    if x.imag == 0 and x.real >= 1:
        if x.real == 1:
            return 1 + 0j if k == 1 else zeta_reference(2.0)
        raise BranchCutError("closed forms for s = 1, 2 need x off [1, inf)")
    if x == 0:
        return 0j
    log1mx = principal_log(1.0 - x)
    if k == 1:
        return 1.0 + (x - 1.0) * (1.0 - log1mx)
    # int_x^1 Li_2(z) dz = zeta(2) - 1 - x Li_2(x) + (1-x) log(1-x) + x
    z2 = zeta_reference(2.0)
    tail = z2 - 1.0 - x * polylog(2.0, x) + (1.0 - x) * log1mx + x
    return z2 + (x - 1.0) * (0.5 * log1mx * log1mx - log1mx + 1.0) - tail


def z_value(s, x, method: ZEvalMethod = "auto", terms: int = _SERIES_TERMS) -> complex:
    """Z(s, x) by the requested method.

    ``auto`` takes the closed form when one exists, the series for |x| <= 0.5,
    the integral otherwise.
    """
    s = complex(s)
    x = complex(x)
    if method not in _METHODS:
        raise DomainError(f"method must be one of {_METHODS}")
    if x == 0:
        return 0j
    if method == "auto":
        if s.imag == 0 and s.real == math.floor(s.real) and -8 <= s.real <= 2:
            method = "closed_form"
        elif abs(x) <= 0.5 or (is_nonpositive_integer(s) and abs(x) < 1):
            method = "series"
        else:
            method = "integral"
    if method == "closed_form":
        return z_closed_form(s, x)
    if method == "series":
        return z_series(s, x, terms)[0]
    _check_integral_domain(x)
    if x.imag == 0:
        if x.real == 1:
            return -_tau_integral(s, 0.0, math.inf)
        return -_tau_integral(s, 0.0, -math.log1p(-x.real))
    return -_segment_integral(s, x)


def z_tail(s, x) -> complex:
    """int_x^1 Li_s(z/(z-1)) dz for real x in [0, 1)."""
    s = complex(s)
    x = float(x)
    if not 0 <= x < 1:
        raise DomainError("z_tail takes real x in [0, 1)")
    return _tau_integral(s, -math.log1p(-x), math.inf)


def log_ratio_L(x: float) -> float:
    """L(x) = -log(1/x - 1) = log(x/(1-x))."""
    if not 0 < x < 1:
        raise DomainError("L(x) needs 0 < x < 1")
    return math.log(x) - math.log1p(-x)


def error_term_probe(s, x: float) -> ErrorTermEstimate:
    """Compare int_x^1 Li_s(z/(z-1)) dz with -(1-x) L(x)^s / Gamma(1+s)."""
    s = complex(s)
    x = float(x)
    if not s.real > 0:
        raise DomainError("error_term_probe needs Re(s) > 0")
    if not 0.5 < x < 1:
        raise DomainError("error_term_probe takes 0.5 < x < 1")
    exact = z_tail(s, x)
    lead = -reciprocal_gamma(s + 1.0) * (1.0 - x) * principal_pow(log_ratio_L(x), s)
    ratio = exact / lead if lead != 0 else complex(math.nan, math.nan)
    return ErrorTermEstimate(complex(x), exact, lead, ratio)


def zero_split_identity(s) -> Tuple[complex, complex]:
    """(int_0^(1/2), int_(1/2)^1) of Li_s(z/(z-1)) dz; they cancel exactly when zeta(s) = 0."""
    s = complex(s)
    if s == 1:
        raise SingularPointError("s = 1 is the pole of zeta")
    half = math.log(2.0)
    return _tau_integral(s, 0.0, half), _tau_integral(s, half, math.inf)
