"""Globally convergent series for zeta(s) and an Euler-Maclaurin reference.

Every series has the shape  raw(s) = sum_n c_n T_n(s)  with T_n one of the
finite sums S_n(s), S_n(s-1), S~_n(s). Each T_n is a Mellin moment

    T_n = 1/Gamma(a) int_0^inf q^(n-1) e^(-b t) t^(a-1) dt,   q = 1 - e^-t,

so the part of the series left after N terms is the single integral of the
weight against F(q) - sum_{n<=N} c_n q^(n-1), where F is the generating
function of the c_n. Adding that tail makes a short partial sum exact; the
tail is reported separately in the trace.

    kind         raw sum                 c_n        F(q)              zeta(s)
    this_paper   sum S_n(s)/(n+1)         1/(n+1)    (t-q)/q^2         raw/(s-1)
    hasse        sum S_n(s-1)/n           1/n        t/q               raw/(s-1)
    ser          sum |G_n| S_n(s)         |G_n|      1/q - 1/t         1/(s-1) + raw
    blagouchine  sum C_n S~_n(s)          C_n        e^t/t - 1/q       s/(s-1) - raw
    knopp        sum S_{n+1}(s)/2^(n+1)   2^-n       1/(2-q)           raw/(1-2^(1-s))
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Literal, Optional, Sequence, Tuple

import numpy as np

from .core_numeric import gamma, is_nonpositive_integer, principal_pow, reciprocal_gamma, sinpi
from .errors import DomainError, PoleError
from .finite_sums import N_SWITCH, FiniteSumMode, s_sum, s_sum_integral_many, s_tilde_sum
from .quadrature import QuadTolerance, integrate_semi_infinite
from .special_numbers import bernoulli_number, cauchy_numbers_float, gregory_abs_float

__all__ = [
    "SERIES_KINDS",
    "PartialSumTrace",
    "SeriesKind",
    "SeriesSpec",
    "TraceRow",
    "convergence_report",
    "predicted_term_magnitude",
    "series_tail",
    "zeta_reference",
    "zeta_via_series",
]

SeriesKind = Literal["this_paper", "hasse", "ser", "blagouchine", "knopp"]
SERIES_KINDS: Tuple[str, ...] = ("this_paper", "hasse", "ser", "blagouchine", "knopp")

_Q_SPLIT = 0.75  # below it the remainder is summed term by term
_TAIL_TERMS = 140  # 0.75^140 < 1e-17
_TAIL_TOL = QuadTolerance(abs_tol=1e-16, rel_tol=1e-12, max_evaluations=400_000)
_BATCH = 64


@dataclass(frozen=True)
class SeriesSpec:
    """How to sum one series.

    ``tail`` adds the exact remainder integral after the last summed term;
    with ``tail=False`` the bare partial sum is returned.
    """

    kind: SeriesKind = "this_paper"
    max_terms: int = N_SWITCH
    term_mode: FiniteSumMode = "auto"
    target_tol: float = 0.0
    tail: bool = True

    def __post_init__(self):
        if self.kind not in SERIES_KINDS:
            raise DomainError(f"unknown series kind {self.kind!r}")
        if isinstance(self.max_terms, bool) or int(self.max_terms) != self.max_terms or self.max_terms < 1:
            raise DomainError("max_terms must be a positive integer")
        if self.term_mode not in ("direct", "integral", "auto"):
            raise DomainError("term_mode must be direct, integral or auto")
        if not self.target_tol >= 0:
            raise DomainError("target_tol must be nonnegative")


@dataclass(frozen=True)
class TraceRow:
    n: int
    term: complex
    partial: complex
    predicted_term_magnitude: float
    ratio: float  # |term| / prediction, nan when the prediction is 0


@dataclass(frozen=True)
class PartialSumTrace:
    kind: str
    s: complex
    rows: Tuple[TraceRow, ...]
    tail: complex = 0j
    tail_error: float = 0.0
    truncated: bool = False  # True when a direct-mode request was capped at N_SWITCH

    @property
    def partial(self) -> complex:
        return self.rows[-1].partial if self.rows else 0j

    @property
    def raw(self) -> complex:
        """Partial sum plus tail, before conversion to zeta(s)."""
        return self.partial + self.tail

    def terms(self) -> np.ndarray:
        return np.array([r.term for r in self.rows], dtype=complex)


# ---------------------------------------------------------------- coefficients


def _coefficients(kind: str, count: int) -> np.ndarray:
    n = np.arange(1, count + 1, dtype=float)
    if kind == "this_paper":
        return 1.0 / (n + 1.0)
    if kind == "hasse":
        return 1.0 / n
    if kind == "ser":
        return np.asarray(gregory_abs_float(count), dtype=float)
    if kind == "blagouchine":
        return np.asarray(cauchy_numbers_float(count), dtype=float)
    return np.ldexp(1.0, -np.arange(1, count + 1))


def _first_index(kind: str) -> int:
    # row label of the first term; Knopp's sum is printed from n = 0
    return 0 if kind == "knopp" else 1


def _term_sum(kind: str, s: complex, n: int, mode: str) -> complex:
    if kind == "hasse":
        return s_sum(n, s - 1.0, mode)
    if kind == "blagouchine":
        return s_tilde_sum(n, s, mode)
    return s_sum(n, s, mode)


def _term_sums(kind: str, s: complex, ns: Sequence[int], mode: str) -> List[complex]:
    arg = s - 1.0 if kind == "hasse" else s
    decay = 2 if kind == "blagouchine" else 1
    if mode != "integral" or is_nonpositive_integer(arg):
        return [_term_sum(kind, s, n, "direct" if mode == "direct" else mode) for n in ns]
    # the integral representation needs Re(arg) > 1 - n; the first few terms go direct
    low = [n for n in ns if arg.real <= 1 - n]
    high = [n for n in ns if arg.real > 1 - n]
    values = {n: _term_sum(kind, s, n, "direct") for n in low}
    for i in range(0, len(high), _BATCH):
        chunk = high[i : i + _BATCH]
        values.update(zip(chunk, (complex(v) for v in s_sum_integral_many(chunk, arg, decay))))
    return [values[n] for n in ns]


# ---------------------------------------------------------------- predictions


def predicted_term_magnitude(kind: str, s, n: int) -> float:
    """|u_n| from the leading asymptotics of each series (0 where log n = 0)."""
    s = complex(s)
    if kind == "knopp":
        m = n + 1  # row n carries S_{n+1}
    else:
        m = n
    if m < 2:
        return 0.0
    L = math.log(m)
    if kind == "this_paper":
        val = principal_pow(L, s - 1) * reciprocal_gamma(s) / (m * (m + 1))
    elif kind == "hasse":
        val = principal_pow(L, s - 2) * reciprocal_gamma(s - 1) / (m * m)
    elif kind == "ser":
        val = principal_pow(L, s - 3) * reciprocal_gamma(s) / (m * m)
    elif kind == "blagouchine":
        val = principal_pow(L, s - 2) * reciprocal_gamma(s) / (m * m)
    elif kind == "knopp":
        return math.ldexp(abs(principal_pow(L, s - 1) * reciprocal_gamma(s)) / m, -m)
    else:
        raise DomainError(f"unknown series kind {kind!r}")
    return abs(val)


# ---------------------------------------------------------------- exact tail


def _generating(kind: str, t: np.ndarray, q: np.ndarray) -> np.ndarray:
    if kind == "this_paper":
        return (t - q) / (q * q)
    if kind == "hasse":
        return t / q
    if kind == "ser":
        return 1.0 / q - 1.0 / t
    if kind == "blagouchine":
        return np.exp(t) / t - 1.0 / q
    return 1.0 / (2.0 - q)


def _horner(coef: np.ndarray, q: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(q)
    for c in coef[::-1]:
        acc = acc * q + c
    return acc


def _knopp_remainder(q: np.ndarray, N: int) -> np.ndarray:
    # 1/(2-q) - sum_{n<=N} 2^-n q^(n-1) = (q/2)^N / (2-q)
    return np.power(0.5 * q, N) / (2.0 - q)


def _remainder_kernel(kind: str, N: int) -> Callable[[np.ndarray], np.ndarray]:
    """t -> F(q) - sum_{n<=N} c_n q^(n-1)."""
    if kind == "knopp":
        return lambda t: _knopp_remainder(-np.expm1(-t), N)
    coef = _coefficients(kind, N + _TAIL_TERMS)
    head, rest = coef[:N], coef[N:]

    def kern(t):
        q = -np.expm1(-t)
        out = np.empty_like(t)
        small = q <= _Q_SPLIT
        if np.any(small):
            qs = q[small]
            out[small] = np.power(qs, N) * _horner(rest, qs)
        big = ~small
        if np.any(big):
            tb, qb = t[big], q[big]
            out[big] = _generating(kind, tb, qb) - _horner(head, qb)
        return out

    return kern


def series_tail(kind: str, s, N: int, tol: QuadTolerance = _TAIL_TOL, scale: float = 1.0) -> Tuple[complex, float]:
    """Exact value of sum_{n>N} c_n T_n(s) and its error estimate.

    ``scale`` is the magnitude of the summed terms; the absolute target is
    ``tol.abs_tol * scale`` since nothing finer survives the partial sum.
    """
    s = complex(s)
    a = s - 1.0 if kind == "hasse" else s
    b = 2.0 if kind == "blagouchine" else 1.0
    rg = reciprocal_gamma(a)
    if rg == 0:
        # T_n vanishes identically for large n at nonpositive integer order
        return 0j, 0.0
    alpha = a.real - 1.0 + N
    if alpha <= -1:
        raise DomainError("tail integral diverges; increase the number of terms")
    kern = _remainder_kernel(kind, N)
    am1 = a - 1.0

    def f(t):
        t = np.where(t > 0, t, 1e-300)
        return kern(t) * np.exp(am1 * np.log(t) - b * t)

    qt = QuadTolerance(
        abs_tol=tol.abs_tol * scale / max(abs(rg), 1e-300), rel_tol=tol.rel_tol, max_evaluations=tol.max_evaluations
    )
    lp = None if alpha >= 0.5 else 1.0 / max(alpha + 1.0, 0.1)
    first = max(1.0, math.log(N) - 1.0)
    res = integrate_semi_infinite(f, 0.0, qt, decay_hint=b - 1.0 if b > 1 else 0.5, left_power=lp, first_panel=first)
    return complex(res.value) * rg, res.abs_error_estimate * abs(rg)


# ---------------------------------------------------------------- transforms


def _check_s(kind: str, s: complex) -> None:
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    # at s = 1 + 2 pi i k / ln 2 the factor is zero up to rounding in 2^(1-s)
    if kind == "knopp" and abs(1.0 - principal_pow(2.0, 1.0 - s)) < 1e-13:
        raise DomainError("1 - 2^(1-s) vanishes; Knopp's sum cannot recover zeta here")


def _to_zeta(kind: str, s: complex, raw: complex) -> complex:
    if kind in ("this_paper", "hasse"):
        return raw / (s - 1.0)
    if kind == "ser":
        return 1.0 / (s - 1.0) + raw
    if kind == "blagouchine":
        return s / (s - 1.0) - raw
    return raw / (1.0 - principal_pow(2.0, 1.0 - s))


def _run(s: complex, spec: SeriesSpec, sample: Optional[Sequence[int]] = None) -> PartialSumTrace:
    kind = spec.kind
    _check_s(kind, s)
    count = int(spec.max_terms)
    truncated = False
    if spec.term_mode == "direct" and count > N_SWITCH:
        count, truncated = N_SWITCH, True
    offset = _first_index(kind)
    if sample is not None:
        ms = sorted({int(m) + (1 - offset) for m in sample})
        if not ms or ms[0] < 1:
            raise DomainError("sample indices out of range")
    else:
        ms = list(range(1, count + 1))
    coef = _coefficients(kind, ms[-1])

    rows: List[TraceRow] = []
    partial = 0j
    quiet = 0
    direct_ms = [m for m in ms if spec.term_mode == "direct" or (spec.term_mode == "auto" and m <= N_SWITCH)]
    other_ms = [m for m in ms if m not in set(direct_ms)]
    values = dict(zip(direct_ms, _term_sums(kind, s, direct_ms, "direct")))
    pending = list(other_ms)
    for m in ms:
        if m not in values:
            batch, pending = pending[:_BATCH], pending[_BATCH:]
            values.update(zip(batch, _term_sums(kind, s, batch, "integral")))
        term = complex(coef[m - 1]) * values.pop(m)
        partial = partial + term
        n = m - 1 + offset
        pred = predicted_term_magnitude(kind, s, n)
        ratio = abs(term) / pred if pred > 0 else math.nan
        rows.append(TraceRow(n, term, partial, pred, ratio))
        if sample is None and spec.target_tol > 0:
            quiet = quiet + 1 if abs(term) < spec.target_tol else 0
            if quiet >= 3:
                break
    tail, tail_err = 0j, 0.0
    if sample is None and spec.tail:
        scale = max([abs(r.term) for r in rows] + [1e-300])
        tail, tail_err = series_tail(kind, s, len(rows), scale=scale)
    return PartialSumTrace(kind, s, tuple(rows), tail, tail_err, truncated)


def zeta_via_series(s, spec: SeriesSpec = SeriesSpec()) -> Tuple[complex, PartialSumTrace]:
    """zeta(s) from one of the five series; the trace keeps every term.

    Stops after three consecutive terms below ``spec.target_tol``.
    """
    s = complex(s)
    trace = _run(s, spec)
    return _to_zeta(spec.kind, s, trace.raw), trace


def convergence_report(s, spec: SeriesSpec = SeriesSpec(), at: Optional[Iterable[int]] = None) -> PartialSumTrace:
    """Trace of terms against their predicted magnitudes.

    ``at`` picks individual row indices (e.g. n = 4096) instead of 1..max_terms;
    partial sums then run over the sampled terms only.
    """
    s = complex(s)
    if at is None:
        return _run(s, SeriesSpec(spec.kind, spec.max_terms, spec.term_mode, spec.target_tol, tail=False))
    return _run(s, spec, sample=list(at))


# ---------------------------------------------------------------- reference


def _em_zeta(s: complex) -> complex:
    """Euler-Maclaurin summation, Re(s) >= 0 (s != 1)."""
    N = int(max(16.0, 1.2 * abs(s))) + 4
    head = [complex(n) ** (-s) for n in range(1, N)]
    acc = complex(math.fsum(z.real for z in head), math.fsum(z.imag for z in head))
    logN = math.log(N)
    nps = cmath.exp(-s * logN)
    acc += N * nps / (s - 1.0) + 0.5 * nps
    # sum_k B_2k/(2k)! s(s+1)...(s+2k-2) N^(-s-2k+1)
    poch = s
    power = nps / N
    fact = 2.0
    prev = math.inf
    for k in range(1, 30):
        term = float(bernoulli_number(2 * k)) / fact * poch * power
        if abs(term) > prev:
            break
        acc += term
        if abs(term) < 1e-17 * abs(acc):
            break
        prev = abs(term)
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        power /= N * N
        fact *= (2 * k + 1) * (2 * k + 2)
    return acc


def zeta_reference(s) -> complex:
    """Riemann zeta by Euler-Maclaurin, reflected through the functional equation for Re(s) < 0."""
    s = complex(s)
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    if s.real >= 0:
        return _em_zeta(s)
    if s.imag == 0 and s.real == math.floor(s.real) and int(s.real) % 2 == 0:
        return 0j  # trivial zeros
    one_s = 1.0 - s
    return (
        principal_pow(2.0, s)
        * principal_pow(math.pi, s - 1.0)
        * sinpi(s / 2.0)
        * gamma(one_s)
        * _em_zeta(one_s)
    )
