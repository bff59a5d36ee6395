"""Kernel backends for the jet hot loop.

Two interchangeable implementations of the truncated-product sweep:

* ``cython``: compiled loop from :mod:`finslerlab._jetcore` (built at install
  time; optional).
* ``python``: ``numpy.bincount`` gather/scatter, used as the fallback and as a
  cross-check of the compiled kernel.

Both accumulate in identical index order, so results agree bit for bit.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import ConfigurationError


class PythonKernel:
    name = "python"

    @staticmethod
    def mul(a: np.ndarray, b: np.ndarray, tab) -> np.ndarray:
        ii, jj, kk = tab.mul_table
        return np.bincount(kk, weights=a[ii] * b[jj], minlength=tab.ncoef)


class CythonKernel:
    name = "cython"

    def __init__(self, core):
        self._mul_into = core.mul_into

    def mul(self, a: np.ndarray, b: np.ndarray, tab) -> np.ndarray:
        ii, jj, kk = tab.mul_table
        out = np.zeros(tab.ncoef, dtype=np.float64)
        self._mul_into(np.ascontiguousarray(a), np.ascontiguousarray(b), out, ii, jj, kk)
        return out


def _load(preferred: str):
    if preferred not in ("auto", "cython", "python"):
        raise ConfigurationError(f"unknown jet backend {preferred!r}")
    if preferred in ("auto", "cython"):
        try:
            from . import _jetcore

            return CythonKernel(_jetcore)
        except ImportError:
            if preferred == "cython":
                raise ConfigurationError(
                    "compiled jet kernel requested but finslerlab._jetcore is not built"
                ) from None
    return PythonKernel()


_ACTIVE = _load(os.environ.get("FINSLER_JET_BACKEND", "auto"))


def active():
    return _ACTIVE


def backend_name() -> str:
    return _ACTIVE.name


def set_backend(name: str) -> str:
    """Switch kernel backend ('cython', 'python' or 'auto'); returns the active name."""
    global _ACTIVE
    _ACTIVE = _load(name)
    return _ACTIVE.name
