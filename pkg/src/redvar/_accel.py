"""Optional numba acceleration.

Set ``REDVAR_NO_NUMBA=1`` to force the pure-numpy code paths (also used
automatically when numba is not importable).
"""
from __future__ import annotations

import os

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

ENABLE_NUMBA = numba is not None and os.environ.get("REDVAR_NO_NUMBA", "0") in ("", "0")
CACHE_NUMBA = True


def jit_decorator(func):
    """Compile ``func`` in nopython mode when acceleration is enabled."""
    if ENABLE_NUMBA:
        return numba.jit(nopython=True, cache=CACHE_NUMBA)(func)
    return func


def backend() -> str:
    return "numba" if ENABLE_NUMBA else "numpy"
