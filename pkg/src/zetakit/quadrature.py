"""Adaptive Gauss-Kronrod quadrature for complex (and vector) integrands.

The base rule is the 10-point Gauss / 21-point Kronrod pair with the
QUADPACK error heuristic, refined by global bisection of the worst
subintervals. Integrands receive a 1-D float array of nodes and return an
array whose last axis matches it; an extra leading axis makes the integrand
vector valued and the tolerance then applies componentwise. Scalar-only
integrands are detected and looped over.

Results are deterministic: the final value is an exact ``math.fsum`` over
subintervals taken in order of their left endpoints.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import DomainError, NonConvergenceError

__all__ = [
    "DEFAULT_TOLERANCE",
    "QuadResult",
    "QuadTolerance",
    "integrate_finite",
    "integrate_semi_infinite",
]

_XK = np.array([
    0.99565716302580808074, 0.97390652851717172008, 0.930157491355708226,
    0.86506336668898451073, 0.78081772658641689706, 0.67940956829902440623,
    0.56275713466860468334, 0.4333953941292471908, 0.29439286270146019813,
    0.14887433898163121088, 0.0,
])
_WK = np.array([
    0.011694638867371874278, 0.032558162307964727479, 0.054755896574351996031,
    0.075039674810919952767, 0.093125454583697605535, 0.1093871588022976419,
    0.12349197626206585108, 0.13470921731147332593, 0.1427759385770600808,
    0.14773910490133849137, 0.14944555400291690566,
])
_WG = np.array([
    0.066671344308688137594, 0.14945134915058059315, 0.219086362515982044,
    0.26926671930999635509, 0.29552422471475287017,
])

_NODES = np.concatenate([-_XK[:-1], _XK[::-1]])
_WK21 = np.concatenate([_WK[:-1], _WK[::-1]])
_WG21 = np.zeros(21)
for _i, _w in zip((1, 3, 5, 7, 9), _WG):
    _WG21[_i] = _w
    _WG21[20 - _i] = _w
_NPTS = 21
_EPS = float(np.finfo(float).eps)
_TINY = float(np.finfo(float).tiny)
_BATCH = 32  # worst intervals bisected per integrand call
_ROUNDOFF = 20.0 * _EPS
_FLOOR = 10.0


@dataclass(frozen=True)
class QuadTolerance:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_evaluations: int = 200_000

    def __post_init__(self):
        if self.abs_tol < 0 or self.rel_tol < 0:
            raise DomainError("tolerances must be nonnegative")
        if self.abs_tol == 0 and self.rel_tol == 0:
            raise DomainError("at least one of abs_tol, rel_tol must be positive")
        if self.max_evaluations <= 0:
            raise DomainError("max_evaluations must be positive")


DEFAULT_TOLERANCE = QuadTolerance()


@dataclass(frozen=True)
class QuadResult:
    """Integration outcome.

    ``value`` is a complex scalar, or a complex array for vector integrands,
    in which case ``component_errors`` holds the per-component estimates and
    ``abs_error_estimate`` their maximum.

    Requests below the rounding floor (about 20 eps times the integral of
    |f|) are treated as met once the estimate reaches that floor.
    """

    value: object
    abs_error_estimate: float
    evaluations: int
    component_errors: Optional[np.ndarray] = None


class _Evaluator:
    """Normalizes a user integrand to an (m, n) complex evaluator."""

    def __init__(self, f: Callable):
        self.f = f
        self.loop = None
        self.m = 1
        self.scalar = True
        self.calls = 0

    def __call__(self, t: np.ndarray) -> np.ndarray:
        self.calls += t.size
        if self.loop is None:
            return self._first(t)
        if self.loop:
            rows = [np.asarray(self.f(float(v)), dtype=complex).ravel() for v in t]
            return np.array(rows).T.reshape(self.m, t.size)
        y = np.asarray(self.f(t), dtype=complex)
        if y.ndim == 0:
            return np.full((1, t.size), complex(y))
        return y.reshape(self.m, t.size)

    def _first(self, t):
        try:
            y = np.asarray(self.f(t), dtype=complex)
        except (TypeError, ValueError):
            y = None
        if y is not None and y.ndim == 0:
            self.loop = False
            return np.full((1, t.size), complex(y))
        if y is not None and 1 <= y.ndim <= 2 and y.shape[-1] == t.size:
            self.loop = False
            self.scalar = y.ndim == 1
            self.m = 1 if self.scalar else y.shape[0]
            return y.reshape(self.m, t.size)
        y0 = np.asarray(self.f(float(t[0])), dtype=complex)
        self.loop = True
        self.scalar = y0.ndim == 0
        self.m = max(1, y0.size)
        self.calls -= t.size
        return self(t)


class _Line:
    """Pieces (g, lo, hi) glued onto the parameter line [0, len(pieces))."""

    def __init__(self, ev: _Evaluator, pieces):
        self.ev = ev
        self.pieces = pieces

    def __call__(self, u: np.ndarray) -> np.ndarray:
        n = len(self.pieces)
        idx = np.minimum(np.floor(u).astype(np.intp), n - 1)
        if n == 1:
            g, lo, hi = self.pieces[0]
            return g(lo + u * (hi - lo)) * (hi - lo)
        out = None
        for j in np.unique(idx):
            g, lo, hi = self.pieces[j]
            sel = idx == j
            val = g(lo + (u[sel] - j) * (hi - lo)) * (hi - lo)
            if out is None:
                out = np.empty((val.shape[0], u.size), dtype=complex)
            out[:, sel] = val
        return out


def _gk(line: _Line, lefts: np.ndarray, rights: np.ndarray):
    """GK21 on each [left, right] of the parameter line.

    Returns Kronrod values, QUADPACK error estimates (both (m, k)) and the
    largest |integrand| over the rightmost nodes of each interval.
    """
    centers = 0.5 * (lefts + rights)
    halves = 0.5 * (rights - lefts)
    t = (centers[:, None] + halves[:, None] * _NODES[None, :]).ravel()
    y = line(t)
    y = y.reshape(y.shape[0], lefts.size, _NPTS)
    if not np.all(np.isfinite(y)):
        raise DomainError("integrand returned a non-finite value")
    kron = (y @ _WK21) * halves
    gauss = (y @ _WG21) * halves
    mean = (y @ _WK21) * 0.5
    absy = np.abs(y)
    resasc = (np.abs(y - mean[..., None]) @ _WK21) * halves
    resabs = (absy @ _WK21) * halves
    err = np.abs(kron - gauss)
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = resasc * np.minimum(1.0, (200.0 * err / resasc) ** 1.5)
    err = np.where(resasc > 0, scaled, err)
    floor = _FLOOR * _EPS * resabs
    err = np.maximum(err, floor)
    return kron, err, absy[..., -5:].max(axis=-1), resabs


def _fsum_complex(values) -> complex:
    values = np.asarray(values)
    return complex(math.fsum(values.real.tolist()), math.fsum(values.imag.tolist()))


def _adapt(line: _Line, lefts, rights, tol: QuadTolerance, extra_err=None) -> QuadResult:
    ev = line.ev
    lefts = np.asarray(lefts, dtype=float)
    rights = np.asarray(rights, dtype=float)
    kron, err, _, rabs = _gk(line, lefts, rights)
    m = kron.shape[0]
    extra = np.zeros(m) if extra_err is None else np.asarray(extra_err, dtype=float)

    store = {}
    heap = []
    serial = 0
    tot_k = kron.sum(axis=1)
    tot_e = err.sum(axis=1)
    tot_abs = rabs.sum(axis=1)

    def target():
        # never ask for more than the rounding level of sum |f|
        req = np.maximum(tol.abs_tol, tol.rel_tol * np.abs(tot_k))
        return np.maximum(np.maximum(req, _ROUNDOFF * tot_abs), _TINY)

    def push(a, b, k, e, r, scale):
        nonlocal serial
        serial += 1
        store[serial] = (a, b, k, e, r)
        heapq.heappush(heap, (-float(np.max(e / scale)), serial))

    scale = target()
    for j in range(lefts.size):
        push(lefts[j], rights[j], kron[:, j], err[:, j], rabs[:, j], scale)

    def result():
        keys = sorted(store, key=lambda key: store[key][0])
        ks = np.array([store[key][2] for key in keys])
        es = np.array([store[key][3] for key in keys]).sum(axis=0) + extra
        value = np.array([_fsum_complex(ks[:, c]) for c in range(m)])
        if ev.scalar:
            return QuadResult(complex(value[0]), float(es[0]), ev.calls, es)
        return QuadResult(value, float(np.max(es)), ev.calls, es)

    rounds = 0
    while np.any(tot_e + extra > target()):
        room = (tol.max_evaluations - ev.calls) // (2 * _NPTS)
        if room < 1:
            raise NonConvergenceError(
                f"quadrature exceeded {tol.max_evaluations} evaluations "
                f"(error estimate {float(np.max(tot_e + extra)):.3g})",
                best=result(),
            )
        if not heap:
            break
        scale = target()
        # bisect the worst interval plus any others of comparable badness
        worst = heap[0][0]
        keys = []
        while heap and len(keys) < min(_BATCH, room) and heap[0][0] <= 0.25 * worst:
            keys.append(heapq.heappop(heap)[1])
        nsplit = len(keys)
        old = [store.pop(key) for key in keys]
        a = np.array([o[0] for o in old])
        b = np.array([o[1] for o in old])
        mid = 0.5 * (a + b)
        if np.any((mid <= a) | (mid >= b)):
            for key, o in zip(keys, old):
                store[key] = o
            raise NonConvergenceError(
                "quadrature subinterval reached machine resolution", best=result()
            )
        kl, el, _, rl = _gk(line, np.concatenate([a, mid]), np.concatenate([mid, b]))
        for o in old:
            tot_k = tot_k - o[2]
            tot_e = tot_e - o[3]
            tot_abs = tot_abs - o[4]
        tot_k = tot_k + kl.sum(axis=1)
        tot_e = tot_e + el.sum(axis=1)
        tot_abs = tot_abs + rl.sum(axis=1)
        for j in range(nsplit):
            push(a[j], mid[j], kl[:, j], el[:, j], rl[:, j], scale)
            push(mid[j], b[j], kl[:, nsplit + j], el[:, nsplit + j], rl[:, nsplit + j], scale)
        rounds += 1
        if rounds % 64 == 0:
            # cancel drift of the running sums
            tot_k = np.array([v[2] for v in store.values()]).sum(axis=0)
            tot_e = np.array([v[3] for v in store.values()]).sum(axis=0)
            tot_abs = np.array([v[4] for v in store.values()]).sum(axis=0)
    return result()


def _substituted(g, a, b, left_power=None, right_power=None):
    """Pieces covering [a, b] with t = a + (b-a)u^p clustering at singular ends."""
    width = b - a
    if left_power and right_power:
        mid = 0.5 * (a + b)
        return _substituted(g, a, mid, left_power, None) + _substituted(g, mid, b, None, right_power)
    if left_power:
        p = float(left_power)

        def h(u):
            up = u ** (p - 1.0)
            return g(a + width * up * u) * (width * p * up)

        return [(h, 0.0, 1.0)]
    if right_power:
        p = float(right_power)

        def h(u):
            up = u ** (p - 1.0)
            return g(b - width * up * u) * (width * p * up)

        return [(h, 0.0, 1.0)]
    return [(g, a, b)]


def integrate_finite(
    f: Callable,
    a: float,
    b: float,
    tol: QuadTolerance = DEFAULT_TOLERANCE,
    *,
    left_power: Optional[float] = None,
    right_power: Optional[float] = None,
    breakpoints: Sequence[float] = (),
) -> QuadResult:
    """Integrate ``f`` over [a, b].

    ``left_power``/``right_power`` = p applies t = a + (b-a)u^p at that end,
    turning an integrable |t-a|^alpha singularity into a smooth one when
    p ~ 1/(1+alpha). Raises NonConvergenceError (with ``best``) when the
    evaluation budget runs out.
    """
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("integrate_finite requires finite limits")
    if not a < b:
        raise DomainError("integrate_finite requires a < b")
    ev = _Evaluator(f)
    edges = [a] + sorted({float(c) for c in breakpoints if a < c < b}) + [b]
    pieces = []
    last = len(edges) - 2
    for j, (lo, hi) in enumerate(zip(edges[:-1], edges[1:])):
        lp = left_power if j == 0 else None
        rp = right_power if j == last else None
        pieces.extend(_substituted(ev, lo, hi, lp, rp))
    line = _Line(ev, pieces)
    n = len(pieces)
    return _adapt(line, np.arange(n), np.arange(1, n + 1), tol)


def integrate_semi_infinite(
    f: Callable,
    a: float,
    tol: QuadTolerance = DEFAULT_TOLERANCE,
    decay_hint: float = 1.0,
    *,
    left_power: Optional[float] = None,
    first_panel: Optional[float] = None,
) -> QuadResult:
    """Integrate ``f`` over [a, inf) for |f(t)| <= M exp(-c t), c >= decay_hint.

    Panels of doubling width are laid out until both the panel integral and
    the tail bound |f(T)|/decay_hint are negligible; that bound is added to
    the error estimate and the kept range [a, T] is refined adaptively.
    """
    a = float(a)
    if not math.isfinite(a):
        raise DomainError("lower limit must be finite")
    if not decay_hint > 0:
        raise DomainError("decay_hint must be positive")
    ev = _Evaluator(f)
    width = float(first_panel) if first_panel else 1.0 / decay_hint
    pieces = _substituted(ev, a, a + width, left_power, None)
    edge = a + width
    line = _Line(ev, pieces)
    k0, _, _, _ = _gk(line, np.arange(len(pieces)), np.arange(1, len(pieces) + 1))
    mag = np.abs(k0).sum(axis=1)
    quiet = 0
    tail = None
    while ev.calls < tol.max_evaluations:
        nxt = edge + width
        probe = _Line(ev, [(ev, edge, nxt)])
        kron, _, end_mag, _ = _gk(probe, np.array([0.0]), np.array([1.0]))
        pieces.append((ev, edge, nxt))
        edge = nxt
        mag = np.maximum(mag, np.abs(kron[:, 0]))
        target = np.maximum(tol.abs_tol, tol.rel_tol * mag)
        bound = end_mag[:, 0] / decay_hint
        if np.all(bound < 1e-3 * target) and np.all(np.abs(kron[:, 0]) < 1e-2 * target + 10 * bound):
            quiet += 1
            if quiet == 2:
                tail = bound
                break
        else:
            quiet = 0
        width *= 2.0
    if tail is None:
        raise NonConvergenceError("integrand did not decay within the evaluation budget")
    line = _Line(ev, pieces)
    n = len(pieces)
    return _adapt(line, np.arange(n), np.arange(1, n + 1), tol, extra_err=tail)
