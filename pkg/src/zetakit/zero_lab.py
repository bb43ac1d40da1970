"""Experiments around the nontrivial zeros.

R(s) is the continuous extension of zeta(s)/zeta(1-s),

    R(s) = pi^(-(1-s)/2) Gamma((1-s)/2) / (pi^(-s/2) Gamma(s/2)),

finite and nonzero at the zeros. Near x = 1 the tail of Z behaves like
a(s) (x-1)^m(s) with a(s) = -1/Gamma(s+1), m(s) = s (up to the L(x)^s
factor), so at a zero s0 the ratio of tails at s0 and 1-s0 carries the
factor L(x)^(2 sigma0 - 1).
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from scipy.optimize import brentq

from .core_numeric import gamma, principal_pow, reciprocal_gamma
from .errors import DomainError, NonConvergenceError
from .param_zeta import log_ratio_L, z_tail
from .polylog import hurwitz_zeta
from .zeta_engine import zeta_reference

__all__ = [
    "ExpansionProfile",
    "RatioScanRow",
    "critical_zeros",
    "default_scan_points",
    "functional_ratio",
    "functional_ratio_check",
    "hardy_z",
    "hurwitz_expansion_check",
    "hurwitz_profile",
    "log_power_factor",
    "necessary_conditions",
    "ratio_scan",
    "refine_zero",
    "riemann_siegel_theta",
    "tail_profile",
]

_MAX_SCAN_K = 12


@dataclass(frozen=True)
class RatioScanRow:
    x: float
    num_abs: float
    den_abs: float
    ratio: float  # nan when den_abs == 0
    predicted_factor: float
    target: float


@dataclass(frozen=True)
class ExpansionProfile:
    a_coeff: complex
    m_exponent: complex


# ---------------------------------------------------------------- functional equation


def functional_ratio(s) -> complex:
    """R(s) from the Gamma/pi closed form."""
    s = complex(s)
    one_s = 1.0 - s
    return (
        principal_pow(math.pi, s / 2.0 - one_s / 2.0)
        * gamma(one_s / 2.0)
        * reciprocal_gamma(s / 2.0)
    )


def functional_ratio_check(s) -> Tuple[complex, float]:
    """R(s) and its relative deviation from zeta(s)/zeta(1-s)."""
    s = complex(s)
    r = functional_ratio(s)
    direct = zeta_reference(s) / zeta_reference(1.0 - s)
    return r, abs(r - direct) / abs(r)


def log_power_factor(sigma0: float, x: float) -> float:
    """L(x)^(2 sigma0 - 1) with L(x) = -log(1/x - 1); needs 1/2 < x < 1."""
    if not 0.5 < x < 1:
        raise DomainError("log_power_factor needs 1/2 < x < 1")
    return log_ratio_L(x) ** (2.0 * sigma0 - 1.0)


def default_scan_points(k_min: int = 2, k_max: int = 8) -> List[float]:
    return [1.0 - 10.0 ** (-k) for k in range(k_min, k_max + 1)]


def ratio_scan(s0, xs: Sequence[float] = None) -> List[RatioScanRow]:
    """|int_x^1 Li_s0(z/(z-1))dz| / |int_x^1 Li_(1-s0)(z/(z-1))dz| along x -> 1.

    Both integrals are computed independently (no conjugation shortcut).
    """
    s0 = complex(s0)
    if not 0 < s0.real < 1:
        raise DomainError("ratio_scan needs 0 < Re(s0) < 1")
    xs = default_scan_points() if xs is None else [float(x) for x in xs]
    for a, b in zip(xs, xs[1:]):
        if not b > a:
            raise DomainError("scan points must increase")
    for x in xs:
        if not 0.5 < x < 1:
            raise DomainError("scan points must lie in (1/2, 1)")
        if 1.0 - x < 10.0 ** (-_MAX_SCAN_K):
            raise DomainError(f"1 - x below 1e-{_MAX_SCAN_K} is not resolved in double precision")
    one_s0 = 1.0 - s0
    const = abs(gamma(one_s0) * one_s0 / (gamma(s0) * s0))
    target = abs(functional_ratio(s0) * (s0 - 1.0) / (-s0))
    rows = []
    for x in xs:
        num = abs(z_tail(s0, x))
        den = abs(z_tail(one_s0, x))
        ratio = num / den if den > 0 else math.nan
        rows.append(RatioScanRow(x, num, den, ratio, const * log_power_factor(s0.real, x), target))
    return rows


# ---------------------------------------------------------------- necessary conditions


def tail_profile(s) -> ExpansionProfile:
    """a(s) = -1/Gamma(s+1), m(s) = s."""
    s = complex(s)
    return ExpansionProfile(-reciprocal_gamma(s + 1.0), s)


def hurwitz_profile(s) -> ExpansionProfile:
    """(s-1) zeta(s, x) about x = 1: a(s) = s (s-1) zeta(s+1), m(s) = 1."""
    s = complex(s)
    return ExpansionProfile(s * (s - 1.0) * zeta_reference(s + 1.0), 1 + 0j)


def necessary_conditions(s0, profile_at_s0: ExpansionProfile, profile_at_1ms0: ExpansionProfile) -> Tuple[float, float]:
    """(amplitude residual, exponent residual) of the two conditions a zero must satisfy."""
    s0 = complex(s0)
    if profile_at_1ms0.a_coeff == 0:
        raise DomainError("a(1 - s0) vanishes; the amplitude condition is degenerate")
    lhs = abs(profile_at_s0.a_coeff / profile_at_1ms0.a_coeff)
    rhs = abs((s0 - 1.0) * functional_ratio(s0) / (-s0))
    return abs(lhs - rhs), abs(profile_at_s0.m_exponent.real - profile_at_1ms0.m_exponent.real)


def hurwitz_expansion_check(s, x: float) -> float:
    """|(s-1)zeta(s,x) - (s-1)zeta(s) - s(s-1)zeta(s+1)(1-x)| / |1-x|^2."""
    s = complex(s)
    x = float(x)
    if s == 1:
        raise DomainError("s = 1 is excluded")
    if not s.real > 0:
        raise DomainError("needs Re(s) > 0")
    if x == 1 or not abs(1.0 - x) < 1:
        raise DomainError("needs 0 < |1 - x| < 1")
    h = 1.0 - x
    sm1 = s - 1.0
    resid = sm1 * hurwitz_zeta(s, x) - sm1 * zeta_reference(s) - s * sm1 * zeta_reference(s + 1.0) * h
    return abs(resid) / (h * h)


# ---------------------------------------------------------------- zeros on the critical line


def riemann_siegel_theta(t: float) -> float:
    """theta(t) = arg Gamma(1/4 + it/2) - (t/2) log pi, Stirling series (t >= 5)."""
    if t < 5:
        g = cmath.log(gamma(0.25 + 0.5j * t))  # principal branch is continuous for small t
        return g.imag - 0.5 * t * math.log(math.pi)
    return (
        0.5 * t * math.log(t / (2.0 * math.pi))
        - 0.5 * t
        - math.pi / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t ** 3)
        + 31.0 / (80640.0 * t ** 5)
    )


def hardy_z(t: float) -> float:
    """Real-valued e^(i theta(t)) zeta(1/2 + it)."""
    return (cmath.exp(1j * riemann_siegel_theta(t)) * zeta_reference(complex(0.5, t))).real


def refine_zero(t_lo: float, t_hi: float, xtol: float = 1e-13) -> complex:
    """The zero 1/2 + it with t in a sign-change bracket of hardy_z."""
    a, b = hardy_z(t_lo), hardy_z(t_hi)
    if a == 0:
        return complex(0.5, t_lo)
    if a * b > 0:
        raise NonConvergenceError("hardy_z does not change sign on the bracket")
    return complex(0.5, brentq(hardy_z, t_lo, t_hi, xtol=xtol, rtol=4 * sys.float_info.epsilon))


def critical_zeros(count: int, step: float = 0.25, start: float = 10.0) -> List[complex]:
    """First ``count`` zeros on the critical line above ``start``, by scanning hardy_z."""
    if count < 1:
        raise DomainError("count must be positive")
    out: List[complex] = []
    t = start
    z_prev = hardy_z(t)
    while len(out) < count:
        if t > start + 1000:
            raise NonConvergenceError("zero scan ran past its search window")
        t_next = t + step
        z_next = hardy_z(t_next)
        if z_prev * z_next < 0:
            out.append(refine_zero(t, t_next))
        t, z_prev = t_next, z_next
    return out
