"""Polylogarithm on the principal branch, Hurwitz zeta (Hermite), inversion formulas.

Li_s(x) is holomorphic in x on the plane cut along [1, inf). Evaluation
methods:

* ``power_series``    sum x^n n^-s, for |x| <= 0.5 (0.9 when Re(s) <= 0)
* ``appell_integral`` 1/Gamma(s) int_0^inf t^(s-1) / (e^t/x - 1) dt, Re(s) > 0
* ``inversion``       Li_s(x) = RHS - e^(i pi s) Li_s(1/x) with the Hurwitz
                      right-hand side, for x off [0, 1]
* ``closed_form``     rational function for s = 0, -1, -2, ... (Eulerian numbers)
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np

from .core_numeric import is_nonpositive_integer, principal_log, principal_pow, reciprocal_gamma
from .errors import BranchCutError, DomainError, MethodUnavailableError, SingularPointError
from .quadrature import QuadTolerance, integrate_finite, integrate_semi_infinite
from .special_numbers import bernoulli_number, eulerian_row

__all__ = [
    "HurwitzArg",
    "PolylogEvalMethod",
    "RHO",
    "RHO_NONPOSITIVE",
    "hurwitz_zeta",
    "hurwitz_zeta_hermite",
    "inversion_formula_rhs",
    "phi",
    "polylog",
    "polylog_array",
    "polylog_asymptotic",
    "polylog_leading_term",
    "select_method",
]

PolylogEvalMethod = Literal["power_series", "appell_integral", "inversion", "closed_form", "auto"]
_METHODS = ("power_series", "appell_integral", "inversion", "closed_form", "auto")

RHO = 0.5
RHO_NONPOSITIVE = 0.9
_SERIES_EPS = 1e-17
_MAX_SERIES_TERMS = 20_000

# accuracy targets expressed in units of the returned value
POLYLOG_TOL = QuadTolerance(abs_tol=1e-13, rel_tol=1e-12, max_evaluations=400_000)
_TWO_PI_I = 2j * math.pi
_ROTATE_ABOVE = 2.0
_MAX_ANGLE = 1.25
_ANGLE_STEP = 0.05


@dataclass(frozen=True)
class HurwitzArg:
    """Arguments of zeta(1 - s, a): ``s_param`` is s, ``a_param`` is a (Re a > 0)."""

    s_param: complex
    a_param: complex

    def __post_init__(self):
        object.__setattr__(self, "s_param", complex(self.s_param))
        object.__setattr__(self, "a_param", complex(self.a_param))
        if not self.a_param.real > 0:
            raise DomainError("Hermite representation requires Re(a) > 0")


def _on_cut(x: complex) -> bool:
    return x.imag == 0 and x.real >= 1


def _series_terms(s: complex, r: float) -> int:
    """Terms needed so that r^N N^-Re(s) < eps (1 - r)."""
    if r == 0:
        return 1
    sigma = s.real
    target = math.log(_SERIES_EPS * (1.0 - r))
    lr = math.log(r)
    n = 8
    while n < _MAX_SERIES_TERMS:
        if n * lr - sigma * math.log(n) < target and (sigma >= 0 or n > -sigma / -lr):
            return n
        n = int(n * 1.25) + 1
    return _MAX_SERIES_TERMS


def _power_series(s: complex, x: complex) -> complex:
    r = abs(x)
    n_terms = _series_terms(s, r)
    n = np.arange(1, n_terms + 1, dtype=float)
    terms = np.exp(n * complex(principal_log(x)) - s * np.log(n))
    return complex(math.fsum(terms.real.tolist()), math.fsum(terms.imag.tolist()))


def _closed_form(s: complex, x: complex) -> complex:
    k = int(-s.real)
    if x == 1:
        raise SingularPointError("Li_s has a pole at x = 1 for s <= 0")
    if k == 0:
        return x / (1.0 - x)
    row = eulerian_row(k)
    num = 0j
    for c in reversed(row):
        num = num * x + c
    return x * num / (1.0 - x) ** (k + 1)


def _appell_tol(s: complex, tol: QuadTolerance) -> QuadTolerance:
    g = abs(reciprocal_gamma(s))
    return QuadTolerance(
        abs_tol=tol.abs_tol / g if g > 0 else tol.abs_tol,
        rel_tol=tol.rel_tol,
        max_evaluations=tol.max_evaluations,
    )


def _left_power(s: complex) -> Optional[float]:
    sigma = s.real
    if sigma >= 1.5:
        return None
    return 1.0 / max(sigma, 0.1)


def _ray_angles(s: complex, logx: np.ndarray) -> np.ndarray:
    """Rotation angle for the Appell ray t = r e^(i theta), per argument.

    For large |Im s| the real-axis integrand is about 1/|Gamma(s)| times
    larger than the result, so rounding is amplified. Turning the ray
    towards sign(Im s) i shrinks it by e^(-theta |Im s|). The sector swept
    must avoid the poles ln x + 2 pi i k of 1/(e^t/x - 1).
    """
    logx = np.atleast_1d(np.asarray(logx, dtype=complex)).ravel()
    omega = s.imag
    if abs(omega) < _ROTATE_ABOVE:
        return np.zeros(logx.shape)
    sgn = 1.0 if omega > 0 else -1.0
    # pole with the smallest positive imaginary part on the rotation side
    im = np.mod(sgn * logx.imag, 2.0 * math.pi)
    limit = np.where(logx.real > 0, 0.75 * np.arctan2(im, np.maximum(logx.real, 1e-300)), _MAX_ANGLE)
    limit = np.minimum(limit, _MAX_ANGLE)
    # quantize downwards so nearby arguments share one quadrature
    return sgn * np.floor(limit / _ANGLE_STEP) * _ANGLE_STEP


def _appell_integrand(s: complex, logx: np.ndarray, theta: float):
    sm1 = s - 1.0
    rot = cmath.exp(1j * theta)
    # Jacobian e^(i theta) and t^(s-1) = r^(s-1) e^(i theta (s-1)) combine to e^(i theta s)
    pref = cmath.exp(1j * theta * s)
    vector = logx.ndim == 2

    def f(r):
        r = np.where(r > 0, r, 1e-300)
        t = r * rot
        if vector:
            w = np.exp(logx - t[None, :])
            return (pref * np.exp(sm1 * np.log(r)))[None, :] * (w / (1.0 - w))
        w = np.exp(logx - t)
        return pref * np.exp(sm1 * np.log(r)) * (w / (1.0 - w))

    return f


def _appell_core(s: complex, logx, tol: QuadTolerance, theta: float):
    f = _appell_integrand(s, logx, theta)
    qt = _appell_tol(s, tol)
    lp = _left_power(s)
    decay = math.cos(theta)
    far = float(np.max(np.real(logx)))
    if far > 0:
        # the integrand changes character around r cos(theta) = ln|x|; a near pole if x hugs the cut
        c = far / decay
        edge = c + 4.0 / decay
        head = integrate_finite(f, 0.0, edge, qt, left_power=lp, breakpoints=(c,))
        tail = integrate_semi_infinite(f, edge, qt, decay_hint=decay)
        value = np.asarray(head.value) + np.asarray(tail.value)
    else:
        value = np.asarray(
            integrate_semi_infinite(f, 0.0, qt, decay_hint=decay, left_power=lp, first_panel=1.0).value
        )
    return value * reciprocal_gamma(s)


def _appell(s: complex, x: complex, tol: QuadTolerance) -> complex:
    lx = np.complex128(principal_log(x))
    return complex(_appell_core(s, lx, tol, float(_ray_angles(s, lx)[0])))


def polylog_array(s, xs, tol: QuadTolerance = POLYLOG_TOL) -> np.ndarray:
    """Appell-integral Li_s at many points off the cut in one vector-valued quadrature.

    Requires Re(s) > 0; zeros of ``xs`` map to 0.
    """
    s = complex(s)
    xs = np.asarray(xs, dtype=complex).ravel()
    if not s.real > 0:
        raise MethodUnavailableError("vectorized Appell evaluation requires Re(s) > 0")
    out = np.zeros(xs.shape, dtype=complex)
    live = xs != 0
    real = xs[live][xs[live].imag == 0]
    if np.any(real.real >= 1):
        raise BranchCutError("argument on the cut [1, inf)")
    if not np.any(live):
        return out
    logx = np.log(xs[live])
    logx = np.where(logx.imag == -math.pi, logx.real + 1j * math.pi, logx)
    thetas = _ray_angles(s, logx)
    vals = np.empty(logx.shape, dtype=complex)
    for theta in np.unique(thetas):
        sel = thetas == theta
        vals[sel] = _appell_core(s, logx[sel][:, None], tol, float(theta))
    out[live] = vals
    return out


def select_method(s, x) -> str:
    """The method ``auto`` would use, or raise MethodUnavailableError."""
    s = complex(s)
    x = complex(x)
    if x == 0:
        return "power_series"
    if _on_cut(x):
        raise BranchCutError(f"x = {x.real:g} lies on the cut [1, inf)")
    r = abs(x)
    if r <= RHO:
        return "power_series"
    if s.real > 0:
        return "appell_integral"
    if is_nonpositive_integer(s):
        return "closed_form"
    if r <= RHO_NONPOSITIVE:
        return "power_series"
    if not (x.imag == 0 and 0 <= x.real <= 1) and abs(1 / x) <= RHO_NONPOSITIVE:
        return "inversion"
    raise MethodUnavailableError(f"no evaluation method for s = {s}, x = {x}")


def polylog(s, x, method: PolylogEvalMethod = "auto", tol: QuadTolerance = POLYLOG_TOL) -> complex:
    """Principal-branch Li_s(x)."""
    if method not in _METHODS:
        raise DomainError(f"method must be one of {_METHODS}")
    s = complex(s)
    x = complex(x)
    if _on_cut(x):
        raise BranchCutError(f"x = {x.real:g} lies on the cut [1, inf)")
    if x == 0:
        return 0j
    if method == "auto":
        method = select_method(s, x)
    if method == "power_series":
        limit = RHO if s.real > 0 else RHO_NONPOSITIVE
        if abs(x) > limit:
            raise MethodUnavailableError(f"power series needs |x| <= {limit}")
        return _power_series(s, x)
    if method == "appell_integral":
        if not s.real > 0:
            raise MethodUnavailableError("Appell integral needs Re(s) > 0")
        return _appell(s, x, tol)
    if method == "closed_form":
        if not is_nonpositive_integer(s):
            raise MethodUnavailableError("closed form exists only for s = 0, -1, -2, ...")
        return _closed_form(s, x)
    # inversion
    if x.imag == 0 and 0 <= x.real <= 1:
        raise MethodUnavailableError("inversion needs x outside [0, 1]")
    inv = 1.0 / x
    if abs(inv) <= (RHO if s.real > 0 else RHO_NONPOSITIVE):
        other = _power_series(s, inv)
    elif s.real > 0:
        other = _appell(s, inv, tol)
    else:
        raise MethodUnavailableError("inversion needs Li_s(1/x) from the power series")
    return inversion_formula_rhs(s, x, "eq7") - cmath.exp(1j * math.pi * s) * other


def _hermite_integral(s: complex, a: complex, tol: QuadTolerance) -> complex:
    sm1 = s - 1.0
    limit0 = -sm1 * principal_pow(a, s - 2.0) / math.pi

    def f(t):
        small = t < 1e-6
        tt = np.where(small, 1.0, t)
        num = np.exp(sm1 * np.log(a - 1j * tt)) - np.exp(sm1 * np.log(a + 1j * tt))
        val = num / (1j * np.expm1(2.0 * math.pi * tt))
        return np.where(small, limit0, val)

    res = integrate_semi_infinite(f, 0.0, tol, decay_hint=2.0 * math.pi, first_panel=0.5)
    return complex(res.value)


def hurwitz_zeta_hermite(arg, a=None, tol: QuadTolerance = POLYLOG_TOL) -> complex:
    """zeta(1 - s, a) from Hermite's representation (Re a > 0, s != 0).

    Call as ``hurwitz_zeta_hermite(HurwitzArg(s, a))`` or ``hurwitz_zeta_hermite(s, a)``.
    """
    if isinstance(arg, HurwitzArg):
        s, a = arg.s_param, arg.a_param
    else:
        if a is None:
            raise DomainError("hurwitz_zeta_hermite needs both s and a")
        s, a = complex(arg), complex(a)
        if not a.real > 0:
            raise DomainError("Hermite representation requires Re(a) > 0")
    if s == 0:
        raise DomainError("Hermite representation excludes s = 0")
    head = principal_pow(a, s - 1.0) / 2.0 - principal_pow(a, s) / s
    if s == 1:
        return head
    return head + _hermite_integral(s, a, tol)


def hurwitz_zeta(s, a, tol: QuadTolerance = POLYLOG_TOL) -> complex:
    """zeta(s, a) = sum (n + a)^-s for Re(a) > 0, s != 1."""
    s = complex(s)
    if s == 1:
        raise DomainError("Hurwitz zeta has a pole at s = 1")
    return hurwitz_zeta_hermite(1.0 - s, a, tol=tol)


def inversion_formula_rhs(s, x, variant: Literal["eq7", "eq8", "eq9"] = "eq7",
                          tol: QuadTolerance = POLYLOG_TOL) -> complex:
    """(2 pi i)^s / Gamma(s) * zeta(1 - s, a) with the variant's second argument.

    eq7: a = 1/2 + ln(-x)/(2 pi i), x off [0, 1]
    eq8: a = 1/2 - ln(-1/x)/(2 pi i), x off [1, inf)
    eq9: a = ln(x)/(2 pi i), x off [0, inf); for Im(x) < 0 the argument is
         shifted by +1 so that the left side keeps (-1)^s = e^(i pi s).
    """
    s = complex(s)
    x = complex(x)
    if x == 0:
        raise DomainError("inversion formulas exclude x = 0")
    on_real = x.imag == 0
    if variant == "eq7":
        if on_real and 0 <= x.real <= 1:
            raise DomainError("eq7 requires x outside [0, 1]")
        a = 0.5 + principal_log(-x) / _TWO_PI_I
    elif variant == "eq8":
        if on_real and x.real >= 1:
            raise DomainError("eq8 requires x outside [1, inf)")
        a = 0.5 - principal_log(-1.0 / x) / _TWO_PI_I
    elif variant == "eq9":
        if on_real and x.real >= 0:
            raise DomainError("eq9 requires x outside [0, inf)")
        a = principal_log(x) / _TWO_PI_I
        if x.imag < 0:
            a += 1.0
    else:
        raise DomainError("variant must be eq7, eq8 or eq9")
    if not a.real > 0:
        raise DomainError(f"Hurwitz argument a = {a} has Re(a) <= 0; Hermite evaluation impossible")
    if is_nonpositive_integer(s):
        raise DomainError("inversion formulas need s off the non-positive integers")
    return principal_pow(_TWO_PI_I, s) * reciprocal_gamma(s) * hurwitz_zeta_hermite(s, a, tol=tol)


def polylog_leading_term(s, x) -> complex:
    """-(ln(-x))^s / Gamma(s+1), the large-|x| leading behaviour."""
    s = complex(s)
    x = complex(x)
    if x == 0 or (x.imag == 0 and x.real >= 0):
        raise DomainError("leading term needs x outside [0, inf)")
    return -principal_pow(principal_log(-x), s) * reciprocal_gamma(s + 1.0)


def polylog_asymptotic(s, x, order: int = 0) -> complex:
    """Large-|x| expansion truncated after k = order.

    Li_s(x) ~ +-i pi/Gamma(s) (L +- i pi)^(s-1)
              - sum_k (-1)^k (2 pi)^2k B_2k/(2k)! (L +- i pi)^(s-2k)/Gamma(s+1-2k),
    with L = ln(-x). The upper sign is used when Im(s) >= 0; numerically it
    is the accurate one there, and the lower sign is for Im(s) < 0.
    """
    s = complex(s)
    x = complex(x)
    if not 0 <= order <= 8 or int(order) != order:
        raise DomainError("order must be an integer in [0, 8]")
    if abs(x) < 10:
        raise DomainError("asymptotic expansion needs |x| >= 10")
    if x.imag == 0 and x.real >= 0:
        raise DomainError("asymptotic expansion needs x outside [0, inf)")
    sign = 1.0 if s.imag >= 0 else -1.0
    big = principal_log(-x) + sign * 1j * math.pi
    value = sign * 1j * math.pi * reciprocal_gamma(s) * principal_pow(big, s - 1.0)
    for k in range(int(order) + 1):
        coef = (-1) ** k * (2 * math.pi) ** (2 * k) * float(bernoulli_number(2 * k)) / math.factorial(2 * k)
        value -= coef * principal_pow(big, s - 2 * k) * reciprocal_gamma(s + 1.0 - 2 * k)
    return value


def phi(s, x, method: PolylogEvalMethod = "auto", tol: QuadTolerance = POLYLOG_TOL) -> complex:
    """phi(s, x) = -Li_s(x/(x-1)) = sum_n S_n(s) x^n."""
    s = complex(s)
    x = complex(x)
    if x == 1:
        raise SingularPointError("phi(s, x) is singular at x = 1")
    if x.imag == 0 and x.real > 1:
        raise BranchCutError("x/(x-1) lies on the cut [1, inf) for real x > 1")
    if x == 0:
        return 0j
    return -polylog(s, x / (x - 1.0), method=method, tol=tol)
