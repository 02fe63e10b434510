"""Kernel acceleration switch.

The hot kernels in ``_kernels`` are written once as plain functions over
numpy arrays and python integers.  By default they are compiled with
numba's ``@njit``; setting the environment variable ``SPINEDCAT_JIT=0``
(or ``false``/``off``/``no``) selects the uncompiled pure-python path
instead.  Both variants are importable side by side so the benchmark can
compare them in a single process.
"""

from __future__ import annotations

import os

_FALSY = {"0", "false", "off", "no"}


def _jit_requested() -> bool:
    return os.environ.get("SPINEDCAT_JIT", "1").strip().lower() not in _FALSY


try:
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _njit = None
    HAVE_NUMBA = False

JIT_ENABLED = HAVE_NUMBA and _jit_requested()


def jit_compile(func):
    """Compile ``func`` with numba, or raise if numba is unavailable."""
    if not HAVE_NUMBA:  # pragma: no cover
        raise RuntimeError("numba is not installed; only the pure-python kernels exist")
    return _njit(cache=True)(func)


def maybe_jit(func):
    """Return the jitted variant when enabled, the plain function otherwise."""
    if JIT_ENABLED:
        return jit_compile(func)
    return func
