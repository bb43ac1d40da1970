"""Pure-Python fallback for the compiled kernels (mpmath at binary128 precision)."""

from __future__ import annotations

import math

import mpmath

BACKEND = "python"

_PREC = 113


def alt_binom_sum(N: int, k0: int, shift: float, s) -> complex:
    """sum_{k=k0}^{N} (-1)^k C(N,k) (k+shift)^(-s) at 113-bit working precision."""
    ctx = mpmath.mp.clone()
    ctx.prec = _PREC
    z = complex(s)
    ms = ctx.mpc(z.real, z.imag)
    acc = ctx.mpc(0)
    sh = ctx.mpf(shift)
    for k in range(k0, N + 1):
        term = math.comb(N, k) * ctx.power(k + sh, -ms)
        acc = acc - term if k & 1 else acc + term
    return complex(acc)
