"""Compiled vs pure-Python kernel for the binary128 alternating binomial sum.

    python benchmarks/bench_kernels.py [--repeat 5]

Runs both backends on the same inputs, checks they agree, and prints
per-call timings. The Python backend is loaded directly so both can be
timed in one process.
"""

from __future__ import annotations

import argparse
import timeit

from zetakit import _kernels_py

try:
    from zetakit._ext import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

CASES = [(n, s) for n in (5, 15, 29, 60) for s in (2.0, 0.5 + 3j, 0.5 + 14.134725141734693j)]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _compiled is None:
        print("compiled extension not available; only the fallback can run")
    print(f"{'N':>4} {'s':>24} {'python us':>11} {'compiled us':>12} {'speedup':>8} {'max rel diff':>13}")
    for n, s in CASES:
        py = _kernels_py.alt_binom_sum(n, 0, 1.0, s)
        t_py = min(timeit.repeat(lambda: _kernels_py.alt_binom_sum(n, 0, 1.0, s), number=20, repeat=args.repeat)) / 20
        if _compiled is None:
            print(f"{n:>4} {str(s):>24} {t_py * 1e6:>11.1f} {'-':>12} {'-':>8} {'-':>13}")
            continue
        c = _compiled.alt_binom_sum(n, 0, 1.0, s)
        t_c = min(timeit.repeat(lambda: _compiled.alt_binom_sum(n, 0, 1.0, s), number=200, repeat=args.repeat)) / 200
        diff = abs(py - c) / max(abs(py), 1e-300)
        print(f"{n:>4} {str(s):>24} {t_py * 1e6:>11.1f} {t_c * 1e6:>12.2f} {t_py / t_c:>8.0f} {diff:>13.1e}")


if __name__ == "__main__":
    main()
