"""
Kernel backend selection.

The hot exhaustive scans (tier histograms, dual-oracle sweeps, basis
searches) have two interchangeable implementations: JIT-compiled numba
kernels and a pure-numpy vectorized lane.  The STACKTIER_BACKEND
environment variable picks one:

    STACKTIER_BACKEND=numba   force the JIT lane (error if unavailable)
    STACKTIER_BACKEND=numpy   force the vectorized fallback
    unset / empty             numba when importable, else numpy

benchmarks/bench_backends.py times the two lanes against each other.
"""
from __future__ import annotations

import os

_ENV_VAR = "STACKTIER_BACKEND"
_cached = None


def _load(name: str):
    if name == "numba":
        from . import _kernels_numba

        return _kernels_numba
    if name == "numpy":
        from . import _kernels_numpy

        return _kernels_numpy
    raise ValueError(f"unknown backend {name!r} (expected 'numba' or 'numpy')")


def get_backend(name: str | None = None):
    """Return the kernel module for `name`, or the configured default."""
    global _cached
    if name is not None:
        return _load(name)
    if _cached is not None:
        return _cached
    requested = os.environ.get(_ENV_VAR, "").strip().lower()
    if requested:
        _cached = _load(requested)
        return _cached
    try:
        _cached = _load("numba")
    except ImportError:
        _cached = _load("numpy")
    return _cached


def backend_name() -> str:
    return get_backend().__name__.rsplit("_", 1)[-1]
