"""Exact combinatorial number tables over the rationals.

Bernoulli numbers follow the convention B_1 = -1/2, so that
B_k(x) = sum_j C(k, j) B_{k-j} x^j satisfies B_k(0) = B_k.

Gregory coefficients are the signed G_n of z/log(1+z) = 1 + sum G_n z^n
(1/2, -1/12, 1/24, -19/720, ...). Cauchy numbers of the second kind C_n are
1/2, 5/12, 3/8, ... with C_n = 1 - sum_{k<=n} |G_k|.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

import numpy as np
from scipy import integrate as _sp_integrate

from .errors import CapacityError, DomainError

__all__ = [
    "MAX_BERNOULLI",
    "MAX_TABLE",
    "PolynomialQ",
    "bernoulli_number",
    "bernoulli_polynomial",
    "binomial",
    "cauchy_numbers_2nd",
    "cauchy_numbers_float",
    "eulerian_number",
    "eulerian_row",
    "gregory_abs_float",
    "gregory_coefficients",
]

MAX_BERNOULLI = 64
MAX_TABLE = 128

RationalNumber = Fraction


class PolynomialQ(tuple):
    """Rational polynomial, coefficients in ascending degree, no trailing zeros."""

    def __new__(cls, coefficients):
        coeffs = [Fraction(c) for c in coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [Fraction(0)]
        return super().__new__(cls, coeffs)

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return tuple(self)

    @property
    def degree(self) -> int:
        return len(self) - 1 if any(self) else -1

    def __call__(self, x):
        """Horner evaluation; exact for Fraction/int, floating otherwise."""
        if isinstance(x, (Fraction, int)):
            acc = Fraction(0)
            for c in reversed(self):
                acc = acc * x + c
            return acc
        acc = 0.0
        for c in reversed(self):
            acc = acc * x + float(c)
        return acc

    def integral(self) -> "PolynomialQ":
        """Antiderivative vanishing at 0."""
        return PolynomialQ([0] + [c / (j + 1) for j, c in enumerate(self)])

    def __repr__(self):
        return f"PolynomialQ({[str(c) for c in self]})"


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise DomainError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def _bernoulli_table() -> Tuple[Fraction, ...]:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0
    b = [Fraction(1)]
    for m in range(1, MAX_BERNOULLI + 1):
        acc = sum(math.comb(m + 1, j) * b[j] for j in range(m))
        b.append(-acc / (m + 1))
    return tuple(b)


def bernoulli_number(k: int) -> Fraction:
    if k < 0:
        raise DomainError("Bernoulli index must be nonnegative")
    if k > MAX_BERNOULLI:
        raise CapacityError(f"Bernoulli table holds k <= {MAX_BERNOULLI}")
    return _bernoulli_table()[k]


def bernoulli_polynomial(k: int) -> PolynomialQ:
    if k < 0:
        raise DomainError("Bernoulli index must be nonnegative")
    if k > MAX_BERNOULLI:
        raise CapacityError(f"Bernoulli table holds k <= {MAX_BERNOULLI}")
    return PolynomialQ([math.comb(k, j) * bernoulli_number(k - j) for j in range(k + 1)])


@lru_cache(maxsize=None)
def eulerian_row(k: int) -> Tuple[int, ...]:
    """Eulerian numbers A(k, 0..k-1); A(0, 0) = 1 by convention."""
    if k < 0:
        raise DomainError("Eulerian index must be nonnegative")
    if k == 0:
        return (1,)
    if k == 1:
        return (1,)
    prev = eulerian_row(k - 1)
    row = []
    for j in range(k):
        left = prev[j - 1] if 1 <= j <= len(prev) else 0
        right = prev[j] if j < len(prev) else 0
        row.append((k - j) * left + (j + 1) * right)
    return tuple(row)


def eulerian_number(k: int, j: int) -> int:
    if k < 1:
        raise DomainError("eulerian_number requires k >= 1")
    if j < 0 or j > k - 1:
        return 0
    return eulerian_row(k)[j]


def _check_count(count: int) -> None:
    if count < 1:
        raise DomainError("count must be positive")
    if count > MAX_TABLE:
        raise CapacityError(f"tables hold at most {MAX_TABLE} entries")


@lru_cache(maxsize=None)
def _gregory_table() -> Tuple[Fraction, ...]:
    # invert log(1+z)/z = sum (-1)^k z^k/(k+1); two guard terms
    n = MAX_TABLE + 2
    a = [Fraction((-1) ** k, k + 1) for k in range(n + 1)]
    inv = [Fraction(1)]
    for m in range(1, n + 1):
        inv.append(-sum(a[j] * inv[m - j] for j in range(1, m + 1)))
    return tuple(inv[1 : MAX_TABLE + 1])


def gregory_coefficients(count: int) -> Tuple[Fraction, ...]:
    """Signed G_1..G_count from z/log(1+z) = 1 + sum G_n z^n."""
    _check_count(count)
    return _gregory_table()[:count]


@lru_cache(maxsize=None)
def _cauchy_table() -> Tuple[Fraction, ...]:
    out = []
    acc = Fraction(1)
    for g in _gregory_table():
        acc -= abs(g)
        out.append(acc)
    return tuple(out)


def cauchy_numbers_2nd(count: int) -> Tuple[Fraction, ...]:
    """C_1..C_count, the coefficients of -1/z - 1/((1-z)log(1-z)) = sum C_n z^(n-1)."""
    _check_count(count)
    return _cauchy_table()[:count]


def _gregory_integral(n: int) -> float:
    # |G_n| = int_R e^y (1+e^y)^(-n) / (y^2 + pi^2) dy
    def f(y):
        return math.exp(y - n * math.log1p(math.exp(y)) if y < 30 else y - n * (y + math.log1p(math.exp(-y)))) / (
            y * y + math.pi ** 2
        )

    peak = -math.log(n - 1)
    total = 0.0
    pts = [peak - 60, peak - 10, peak - 2, peak, peak + 2, peak + 10, 40.0]
    for lo, hi in zip(pts[:-1], pts[1:]):
        if hi <= lo:
            continue
        val, _ = _sp_integrate.quad(f, lo, hi, epsabs=0, epsrel=1e-13, limit=200)
        total += val
    return total


@lru_cache(maxsize=32)
def _gregory_abs_cached(count: int) -> np.ndarray:
    exact = [float(abs(g)) for g in _gregory_table()]
    if count <= MAX_TABLE:
        return np.array(exact[:count])
    extra = [_gregory_integral(n) for n in range(MAX_TABLE + 1, count + 1)]
    return np.array(exact + extra)


def gregory_abs_float(count: int) -> np.ndarray:
    """|G_1|..|G_count| as doubles (exact table, then an integral formula beyond it)."""
    if count < 1:
        raise DomainError("count must be positive")
    out = _gregory_abs_cached(count)
    out.flags.writeable = False
    return out


def cauchy_numbers_float(count: int) -> np.ndarray:
    """C_1..C_count as doubles; beyond the exact table, 1 - partial sums of |G_k|."""
    if count < 1:
        raise DomainError("count must be positive")
    if count <= MAX_TABLE:
        return np.array([float(c) for c in _cauchy_table()[:count]])
    exact = [float(c) for c in _cauchy_table()]
    g = gregory_abs_float(count)[MAX_TABLE:]
    tail = exact[-1] - np.cumsum(g)
    return np.concatenate([exact, tail])
