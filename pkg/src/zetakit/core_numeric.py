"""Complex scalar helpers: principal branches and the complex Gamma function.

Branch convention (used by every other module): the principal logarithm has
imaginary part in ``(-pi, pi]``, so the cut runs along the negative real axis
and points on the cut take the upper-side value.
"""

from __future__ import annotations

import cmath
import math
from typing import NamedTuple

from .errors import DomainError, NumericOverflowError, PoleError

__all__ = [
    "BranchedPower",
    "as_complex",
    "branched_power",
    "gamma",
    "is_nonpositive_integer",
    "principal_log",
    "principal_pow",
    "reciprocal_gamma",
    "sinpi",
]

# Lanczos approximation, g = 7, nine terms.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


class BranchedPower(NamedTuple):
    base: complex
    exponent: complex
    value: complex


def as_complex(z) -> complex:
    """Coerce numbers (including numpy scalars) to a builtin complex."""
    return complex(z)


def _check_finite(z: complex, what: str) -> complex:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NumericOverflowError(f"{what} is not finite")
    return z


def principal_log(z) -> complex:
    z = complex(z)
    if z == 0:
        raise DomainError("log(0) is undefined")
    w = cmath.log(z)
    if w.imag == -math.pi:
        # negative real axis approached with a -0.0 imaginary part
        w = complex(w.real, math.pi)
    return w


def principal_pow(base, exponent) -> complex:
    base = complex(base)
    exponent = complex(exponent)
    if base == 0:
        if exponent.real > 0:
            return 0j
        raise DomainError("0 raised to an exponent with Re <= 0")
    if exponent == 0:
        return 1 + 0j
    return _check_finite(cmath.exp(exponent * principal_log(base)), "power")


def branched_power(base, exponent) -> BranchedPower:
    return BranchedPower(complex(base), complex(exponent), principal_pow(base, exponent))


def is_nonpositive_integer(s) -> bool:
    s = complex(s)
    return s.imag == 0 and s.real <= 0 and s.real == math.floor(s.real)


def _sinpi_real(x: float) -> float:
    # argument reduction keeps exact zeros at the integers
    r = math.fmod(x, 2.0)
    if r == 0.0 or abs(r) == 1.0:
        return 0.0
    if r > 1.0:
        r -= 2.0
    elif r < -1.0:
        r += 2.0
    return math.sin(math.pi * r)


def _cospi_real(x: float) -> float:
    return _sinpi_real(x + 0.5)


def sinpi(s) -> complex:
    """sin(pi*s) with exact zeros at the integers."""
    s = complex(s)
    a, b = s.real, s.imag
    pb = math.pi * b
    return complex(_sinpi_real(a) * math.cosh(pb), _cospi_real(a) * math.sinh(pb))


def _lanczos(z: complex) -> complex:
    """Gamma(z) for Re(z) >= 1/2."""
    z = z - 1.0
    acc = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    log_val = _HALF_LOG_TWO_PI + (z + 0.5) * cmath.log(t) - t
    return cmath.exp(log_val) * acc


def gamma(s) -> complex:
    """Complex Gamma function.

    Lanczos (g=7, n=9) on Re(s) >= 1/2, reflection formula below. Raises
    PoleError at the non-positive integers and NumericOverflowError when the
    result does not fit in a double.
    """
    s = complex(s)
    if is_nonpositive_integer(s):
        raise PoleError(f"Gamma has a pole at {s.real:g}")
    try:
        if s.real < 0.5:
            val = math.pi / (sinpi(s) * _lanczos(1.0 - s))
        else:
            val = _lanczos(s)
    except OverflowError as exc:
        raise NumericOverflowError(f"Gamma({s}) overflows") from exc
    return _check_finite(val, f"Gamma({s})")


def reciprocal_gamma(s) -> complex:
    """1/Gamma(s), entire; zero at the non-positive integers."""
    s = complex(s)
    if is_nonpositive_integer(s):
        return 0j
    try:
        if s.real < 0.5:
            return sinpi(s) * _lanczos(1.0 - s) / math.pi
        return 1.0 / _lanczos(s)
    except (OverflowError, ZeroDivisionError) as exc:
        raise NumericOverflowError(f"1/Gamma({s}) is not representable") from exc
