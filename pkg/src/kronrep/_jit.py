"""Optional numba acceleration.

Set ``KRONREP_DISABLE_JIT=1`` to force the pure-numpy kernels.  When numba is
not importable the numpy path is used silently.
"""

from __future__ import annotations

import os

_DISABLED = os.environ.get("KRONREP_DISABLE_JIT", "").strip().lower() in {"1", "true", "yes"}

try:
    if _DISABLED:
        raise ImportError
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    _njit = None
    HAVE_NUMBA = False

USE_JIT = HAVE_NUMBA and not _DISABLED


def njit(func):
    """``numba.njit(cache=True)`` when available, identity otherwise."""
    if _njit is None:
        return func
    return _njit(cache=True)(func)
