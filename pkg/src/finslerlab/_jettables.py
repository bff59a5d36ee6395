"""Multi-index bookkeeping for truncated multivariate Taylor arithmetic.

A ``JetTables`` instance enumerates every exponent vector of total degree at
most ``order`` over ``nvars`` variables, sorted by (degree, position).  The
enumeration for order k is a prefix of the enumeration for order k+1, so
truncating a coefficient vector to a lower order is a slice.

The multiplication table is the flat list of index triples (i, j, k) with
exponent(i) + exponent(j) = exponent(k); a truncated product is one fused
multiply-add sweep over that table.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import ConfigurationError, ContractViolationError

MAX_ORDER = 6


def _monomials(nvars: int, degree: int):
    """Exponent tuples of the given total degree, in a fixed deterministic order."""
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _monomials(nvars - 1, degree - first):
            yield (first,) + rest


class JetTables:
    """Immutable lookup tables for one (nvars, order) truncation."""

    __slots__ = (
        "nvars",
        "order",
        "ncoef",
        "exponents",
        "degree_start",
        "index",
        "mfact",
        "_mul",
        "_deriv",
    )

    def __init__(self, nvars: int, order: int):
        self.nvars = nvars
        self.order = order
        rows = []
        starts = [0]
        for d in range(order + 1):
            rows.extend(_monomials(nvars, d))
            starts.append(len(rows))
        self.ncoef = len(rows)
        self.exponents = np.array(rows, dtype=np.int8)
        self.degree_start = tuple(starts)
        self.index = {row.tobytes(): pos for pos, row in enumerate(self.exponents)}
        self.mfact = np.array(
            [math.prod(math.factorial(int(e)) for e in row) for row in rows],
            dtype=np.float64,
        )
        self._mul = None
        self._deriv = {}

    def ncoef_at(self, order: int) -> int:
        """Coefficient count of the order-``order`` truncation (a prefix)."""
        return self.degree_start[order + 1]

    def position(self, expo) -> int:
        key = np.asarray(expo, dtype=np.int8).tobytes()
        pos = self.index.get(key)
        if pos is None:
            raise ContractViolationError(
                f"multi-index {tuple(int(e) for e in expo)} exceeds carried order {self.order}"
            )
        return pos

    @property
    def mul_table(self):
        """(ii, jj, kk) int32 arrays with expo[ii] + expo[jj] = expo[kk]."""
        if self._mul is None:
            ii, jj, kk = [], [], []
            expo = self.exponents
            starts = self.degree_start
            for di in range(self.order + 1):
                for i in range(starts[di], starts[di + 1]):
                    row_i = expo[i]
                    jmax = starts[self.order - di + 1]
                    for j in range(jmax):
                        key = (row_i + expo[j]).astype(np.int8).tobytes()
                        ii.append(i)
                        jj.append(j)
                        kk.append(self.index[key])
            self._mul = (
                np.array(ii, dtype=np.int32),
                np.array(jj, dtype=np.int32),
                np.array(kk, dtype=np.int32),
            )
        return self._mul

    def deriv_table(self, var: int):
        """(src, scale) mapping order-k coefficients to the order-(k-1) derivative.

        With Taylor-coefficient storage, (d f / d x_var) has coefficient
        ``(J_var + 1) * c[J + e_var]`` at multi-index J.
        """
        tab = self._deriv.get(var)
        if tab is None:
            nlow = self.ncoef_at(self.order - 1)
            src = np.empty(nlow, dtype=np.int32)
            scale = np.empty(nlow, dtype=np.float64)
            for pos in range(nlow):
                row = self.exponents[pos].copy()
                row[var] += 1
                src[pos] = self.index[row.tobytes()]
                scale[pos] = float(row[var])
            tab = (src, scale)
            self._deriv[var] = tab
        return tab


@lru_cache(maxsize=None)
def tables(nvars: int, order: int) -> JetTables:
    if nvars < 1:
        raise ConfigurationError(f"need at least one seed variable, got {nvars}")
    if not 0 <= order <= MAX_ORDER:
        raise ConfigurationError(f"jet order {order} outside supported range 0..{MAX_ORDER}")
    return JetTables(nvars, order)
