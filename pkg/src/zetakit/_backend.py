"""Selects the compiled kernel module when it imports, else the Python fallback.

Set ZETAKIT_BACKEND=python to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("ZETAKIT_BACKEND", "").lower() == "python":
    from . import _kernels_py as kernels
else:
    try:
        from ._ext import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:  # extension not built
        from . import _kernels_py as kernels

BACKEND = kernels.BACKEND
alt_binom_sum = kernels.alt_binom_sum

__all__ = ["BACKEND", "alt_binom_sum", "kernels"]
