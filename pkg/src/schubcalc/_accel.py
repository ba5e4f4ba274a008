"""Backend selection for the finite-field kernels.

Set ``SCHUBCALC_PURE_NUMPY=1`` to use the vectorized numpy implementations even
when numba is installed.
"""

from __future__ import annotations

import os

PURE_NUMPY = os.environ.get("SCHUBCALC_PURE_NUMPY", "").strip().lower() not in ("", "0", "false", "no")

try:
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False
    _njit = None


def njit(*args, **kwargs):
    """``numba.njit`` when available, otherwise a no-op decorator."""
    if HAVE_NUMBA:
        return _njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda f: f


BACKEND = "numpy" if (PURE_NUMPY or not HAVE_NUMBA) else "numba"
