"""Alternating binomial sums S_n(s), Delta_n(s), S~_n(s) and their asymptotics.

    S_n(s)     = sum_{k=0}^{n-1} (-1)^k C(n-1, k) (k+1)^(-s)
    Delta_n(s) = sum_{k=1}^{n}   (-1)^k C(n, k)   k^(1-s)      (= -n S_n(s))
    S~_n(s)    = sum_{k=0}^{n-1} (-1)^k C(n-1, k) (k+2)^(-s)

Direct evaluation suffers cancellation of about n*log10(2) digits, so it is
carried out in binary128 (compiled kernel, or its Python fallback) and is
exact in integer arithmetic for non-positive integer s. The integral mode
uses the cancellation-free representation

    S_n(s) = 1/Gamma(s) int_0^inf (1-e^-t)^(n-1) e^-t t^(s-1) dt,

which converges for Re(s) > 1-n (S~_n uses e^-2t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence

import numpy as np

from . import _backend
from .core_numeric import is_nonpositive_integer, principal_pow, reciprocal_gamma
from .errors import DomainError
from .quadrature import QuadTolerance, integrate_semi_infinite

__all__ = [
    "AsymptoticPrediction",
    "FiniteSumMode",
    "N_SWITCH",
    "delta_sum",
    "kernel_peak",
    "s_sum",
    "s_sum_asymptotic",
    "s_sum_integral_many",
    "s_tilde_sum",
    "exact_s_sum",
]

FiniteSumMode = Literal["direct", "integral", "auto"]
N_SWITCH = 30
_TMIN = 1e-300  # stand-in for t = 0, where the substituted integrand vanishes
_MODES = ("direct", "integral", "auto")

# absolute accuracy asked of S_n in integral mode (before 1/Gamma scaling)
_INTEGRAL_TOL = QuadTolerance(abs_tol=1e-14, rel_tol=1e-12, max_evaluations=400_000)


@dataclass(frozen=True)
class AsymptoticPrediction:
    predicted: complex
    regime: Literal["nonintegral_s", "positive_integer_s", "nonpositive_integer_s"]


def _check_n(n: int) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError("n must be a positive integer")
    return int(n)


def _check_mode(mode: str) -> str:
    if mode not in _MODES:
        raise DomainError(f"mode must be one of {_MODES}")
    return mode


def _exact_sum(N: int, k0: int, shift: int, k_exp: int) -> int:
    # sum_{k=k0}^{N} (-1)^k C(N,k) (k+shift)^k_exp, k_exp >= 0
    total = 0
    for k in range(k0, N + 1):
        term = math.comb(N, k) * (k + shift) ** k_exp
        total += -term if k & 1 else term
    return total


def _direct(N: int, k0: int, shift: int, s: complex) -> complex:
    if is_nonpositive_integer(s):
        return complex(_exact_sum(N, k0, shift, int(-s.real)))
    return _backend.alt_binom_sum(N, k0, float(shift), s)


def _left_power(alpha: float) -> Optional[float]:
    # integrand ~ t^alpha near 0: substitute when the singularity is strong
    if alpha >= 0.5:
        return None
    return 1.0 / max(alpha + 1.0, 0.1)


def _integral(n: int, s: complex, decay: int, tol: QuadTolerance) -> complex:
    """1/Gamma(s) int (1-e^-t)^(n-1) e^(-decay t) t^(s-1) dt."""
    alpha = n - 1 + s.real - 1
    if alpha <= -1:
        raise DomainError("integral representation needs Re(s) > 1 - n")
    rg = reciprocal_gamma(s)
    if rg == 0:
        # S_n vanishes at non-positive integers once n is large enough; use exact sum
        return _direct(n - 1, 0, decay, s)
    sm1 = s - 1.0

    def f(t):
        t = np.where(t > 0, t, _TMIN)
        logk = (n - 1) * np.log(-np.expm1(-t)) - decay * t
        return np.exp(logk + sm1 * np.log(t))

    qt = QuadTolerance(
        abs_tol=tol.abs_tol / max(abs(rg), 1e-300) if tol.abs_tol else 0.0,
        rel_tol=tol.rel_tol,
        max_evaluations=tol.max_evaluations,
    )
    first = max(1.0, math.log(n) - 2.0) if n > 8 else 1.0
    res = integrate_semi_infinite(
        f, 0.0, qt, decay_hint=float(decay), left_power=_left_power(alpha), first_panel=first
    )
    return complex(res.value) * rg


def s_sum(n: int, s, mode: FiniteSumMode = "auto", tol: QuadTolerance = _INTEGRAL_TOL) -> complex:
    """S_n(s); ``auto`` is direct for n <= N_SWITCH and integral above."""
    n = _check_n(n)
    mode = _check_mode(mode)
    s = complex(s)
    if mode == "auto":
        mode = "direct" if n <= N_SWITCH or is_nonpositive_integer(s) else "integral"
    if mode == "direct":
        return _direct(n - 1, 0, 1, s)
    if s.real <= 0 and n == 1:
        raise DomainError("integral mode requires Re(s) > 0 for n = 1")
    return _integral(n, s, 1, tol)


def s_tilde_sum(n: int, s, mode: FiniteSumMode = "direct", tol: QuadTolerance = _INTEGRAL_TOL) -> complex:
    """S~_n(s) = sum_{k<n} (-1)^k C(n-1, k) (k+2)^(-s)."""
    n = _check_n(n)
    mode = _check_mode(mode)
    s = complex(s)
    if mode == "auto":
        mode = "direct" if n <= N_SWITCH or is_nonpositive_integer(s) else "integral"
    if mode == "direct":
        return _direct(n - 1, 0, 2, s)
    if s.real <= 0 and n == 1:
        raise DomainError("integral mode requires Re(s) > 0 for n = 1")
    return _integral(n, s, 2, tol)


def delta_sum(n: int, s) -> complex:
    """Delta_n(s) = sum_{k=1}^{n} (-1)^k C(n, k) k^(1-s), summed directly."""
    n = _check_n(n)
    return _direct(n, 1, 0, complex(s) - 1.0)


def s_sum_integral_many(ns: Sequence[int], s, decay: int = 1, tol: QuadTolerance = _INTEGRAL_TOL) -> np.ndarray:
    """Integral-mode S_n(s) (decay=1) or S~_n(s) (decay=2) for many n in one quadrature."""
    s = complex(s)
    ns = np.asarray(ns, dtype=float)
    if ns.size == 0:
        return np.zeros(0, dtype=complex)
    alpha = float(ns.min()) - 1 + s.real - 1
    if alpha <= -1:
        raise DomainError("integral representation needs Re(s) > 1 - n")
    rg = reciprocal_gamma(s)
    sm1 = s - 1.0
    nm1 = (ns - 1.0)[:, None]

    def f(t):
        t = np.where(t > 0, t, _TMIN)
        base = np.log(-np.expm1(-t))[None, :]
        return np.exp(nm1 * base - decay * t[None, :] + (sm1 * np.log(t))[None, :])

    qt = QuadTolerance(
        abs_tol=tol.abs_tol / max(abs(rg), 1e-300) if rg != 0 else tol.abs_tol,
        rel_tol=tol.rel_tol,
        max_evaluations=tol.max_evaluations * 4,
    )
    n_min = float(ns.min())
    first = max(1.0, math.log(n_min) - 2.0) if n_min > 8 else 1.0
    res = integrate_semi_infinite(
        f, 0.0, qt, decay_hint=float(decay), left_power=_left_power(alpha), first_panel=first
    )
    return np.asarray(res.value) * rg


def s_sum_asymptotic(n: int, s) -> AsymptoticPrediction:
    """Leading-order prediction for S_n(s) as n grows.

    Non-integral s: (log n)^(s-1) / (n Gamma(s)).
    Positive integer k: (log n)^(k-1) / (n (k-1)!), which is the same formula.
    Non-positive integers: 0.
    """
    n = _check_n(n)
    if n < 2:
        raise DomainError("asymptotic prediction needs n >= 2")
    s = complex(s)
    if is_nonpositive_integer(s):
        return AsymptoticPrediction(0j, "nonpositive_integer_s")
    L = math.log(n)
    if s.imag == 0 and s.real == math.floor(s.real):
        k = int(s.real)
        return AsymptoticPrediction(complex(L ** (k - 1) / (n * math.factorial(k - 1))), "positive_integer_s")
    pred = reciprocal_gamma(s) * principal_pow(L, s - 1.0) / n
    return AsymptoticPrediction(pred, "nonintegral_s")


def kernel_peak(n: int) -> float:
    """max_t (1-e^-t)^(n-1) e^(-t/2), attained at e^-t = 1/(2n-1)."""
    n = _check_n(n)
    m = 2 * n - 1
    return (1.0 - 1.0 / m) ** (n - 1) / math.sqrt(m)


def exact_s_sum(n: int, k: int) -> Fraction:
    """S_n(-k) as an exact integer (k >= 0), for the vanishing checks."""
    n = _check_n(n)
    if k < 0:
        raise DomainError("exact_s_sum takes k >= 0 (s = -k)")
    return Fraction(_exact_sum(n - 1, 0, 1, k))
