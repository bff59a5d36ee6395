"""Higher-order forward-mode automatic differentiation on truncated Taylor jets.

A :class:`Jet` carries the value of a scalar quantity together with every
mixed partial derivative, up to a configured total order, with respect to a
fixed set of seed variables.  For curvature work the seeds are the 2n chart
coordinates and fibre coordinates (x, y); covariant-derivative work seeds the
n coordinates x alone.

Coefficients are stored in Taylor normalisation (derivative divided by the
multi-index factorial), densely indexed by the enumeration in
:mod:`finslerlab._jettables`.  Arithmetic is exact truncated-Taylor algebra:
products satisfy the Leibniz rule at every carried order, and composition
with analytic functions (exp, log, powers) goes through a Horner sweep over
the univariate Taylor series of the outer function.

All jets are immutable once built; every operation returns a fresh jet, so
values can be shared freely between concurrent workers.
"""

from __future__ import annotations

import math
import numbers
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from ._jettables import MAX_ORDER, JetTables, tables
from .errors import ConfigurationError, ContractViolationError

__all__ = [
    "Jet",
    "MAX_ORDER",
    "seed",
    "seed_vars",
    "extract",
    "constant",
    "promote",
    "jexp",
    "jlog",
    "jsqrt",
    "jpow",
    "backend_name",
    "set_backend",
]

backend_name = _kernels.backend_name
set_backend = _kernels.set_backend


class Jet:
    """Truncated multivariate Taylor expansion of a scalar quantity."""

    __slots__ = ("tab", "c")

    def __init__(self, tab: JetTables, coeffs: np.ndarray):
        self.tab = tab
        self.c = coeffs

    # -- basic accessors -------------------------------------------------

    @property
    def value(self) -> float:
        return float(self.c[0])

    @property
    def order(self) -> int:
        return self.tab.order

    @property
    def nvars(self) -> int:
        return self.tab.nvars

    def truncate(self, order: int) -> "Jet":
        if order == self.order:
            return self
        if order > self.order:
            raise ContractViolationError(
                f"cannot extend a jet of order {self.order} to order {order}"
            )
        low = tables(self.nvars, order)
        return Jet(low, self.c[: low.ncoef])

    def deriv(self, var: int) -> "Jet":
        """Partial derivative with respect to seed variable ``var`` (one order lower)."""
        if self.order < 1:
            raise ContractViolationError("derivative of an order-0 jet is not carried")
        if not 0 <= var < self.nvars:
            raise ConfigurationError(f"seed variable {var} out of range 0..{self.nvars - 1}")
        src, scale = self.tab.deriv_table(var)
        return Jet(tables(self.nvars, self.order - 1), self.c[src] * scale)

    def extract(self, multi_index: Sequence[int]) -> float:
        """Plain mixed partial derivative for the given exponent vector."""
        mi = tuple(int(e) for e in multi_index)
        if len(mi) != self.nvars:
            raise ConfigurationError(
                f"multi-index has {len(mi)} entries, jet carries {self.nvars} variables"
            )
        if any(e < 0 for e in mi):
            raise ConfigurationError(f"negative exponent in multi-index {mi}")
        if sum(mi) > self.order:
            raise ContractViolationError(
                f"multi-index {mi} of order {sum(mi)} exceeds carried order {self.order}"
            )
        pos = self.tab.position(mi)
        return float(self.c[pos] * self.tab.mfact[pos])

    def __repr__(self):
        return f"Jet(order={self.order}, nvars={self.nvars}, value={self.value!r})"

    # -- arithmetic ------------------------------------------------------

    def _align(self, other: "Jet"):
        if other.tab is self.tab:
            return self.tab, self.c, other.c
        if other.nvars != self.nvars:
            raise ConfigurationError(
                f"cannot combine jets over {self.nvars} and {other.nvars} seed variables"
            )
        order = min(self.order, other.order)
        tab = tables(self.nvars, order)
        return tab, self.c[: tab.ncoef], other.c[: tab.ncoef]

    def __add__(self, other):
        if isinstance(other, Jet):
            tab, a, b = self._align(other)
            return Jet(tab, a + b)
        if isinstance(other, numbers.Real):
            c = self.c.copy()
            c[0] += float(other)
            return Jet(self.tab, c)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.tab, -self.c)

    def __sub__(self, other):
        if isinstance(other, Jet):
            tab, a, b = self._align(other)
            return Jet(tab, a - b)
        if isinstance(other, numbers.Real):
            c = self.c.copy()
            c[0] -= float(other)
            return Jet(self.tab, c)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, numbers.Real):
            c = -self.c
            c[0] += float(other)
            return Jet(self.tab, c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Jet):
            tab, a, b = self._align(other)
            return Jet(tab, _kernels.active().mul(a, b, tab))
        if isinstance(other, numbers.Real):
            return Jet(self.tab, self.c * float(other))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * _reciprocal(other)
        if isinstance(other, numbers.Real):
            return Jet(self.tab, self.c / float(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, numbers.Real):
            return _reciprocal(self) * float(other)
        return NotImplemented

    def __pow__(self, exponent):
        return jpow(self, exponent)


# -- construction ---------------------------------------------------------


def constant(tab: JetTables, value: float) -> Jet:
    c = np.zeros(tab.ncoef)
    c[0] = float(value)
    return Jet(tab, c)


def promote(value, tab: JetTables) -> Jet:
    """Lift a plain number into the jet algebra; jets pass through."""
    if isinstance(value, Jet):
        return value
    return constant(tab, value)


def seed_vars(values: Iterable[float], order: int) -> list[Jet]:
    """Seed one jet per value, each carrying unit first derivative in its own slot."""
    vals = [float(v) for v in values]
    if not 1 <= order <= MAX_ORDER:
        raise ConfigurationError(f"jet order {order} outside supported range 1..{MAX_ORDER}")
    tab = tables(len(vals), order)
    out = []
    for i, v in enumerate(vals):
        c = np.zeros(tab.ncoef)
        c[0] = v
        c[1 + i] = 1.0
        out.append(Jet(tab, c))
    return out


def seed(x: Sequence[float], y: Sequence[float], order: int) -> list[Jet]:
    """Seed the 2n jets for a chart point x and direction y.

    Variables 0..n-1 differentiate in x, variables n..2n-1 in y; mixed
    partials are carried up to total order ``order``.
    """
    if len(x) != len(y):
        raise ConfigurationError(f"dim(x)={len(x)} and dim(y)={len(y)} differ")
    return seed_vars(list(x) + list(y), order)


def extract(jet: Jet, multi_index: Sequence[int]) -> float:
    return jet.extract(multi_index)


# -- analytic functions ----------------------------------------------------


def _compose(u: Jet, series: np.ndarray) -> Jet:
    """Horner evaluation of an outer Taylor series along the jet ``u``.

    ``series[k]`` must be the k-th Taylor coefficient of the outer function
    at ``u.value``; the deviation (u - value) is nilpotent at the truncation
    order, so the sweep is exact.
    """
    tab = u.tab
    w = Jet(tab, u.c.copy())
    w.c[0] = 0.0
    acc = constant(tab, series[-1])
    for k in range(len(series) - 2, -1, -1):
        acc = acc * w + float(series[k])
    return acc


def jexp(u: Jet) -> Jet:
    k = np.arange(u.order + 1)
    series = math.exp(u.value) / np.array([math.factorial(int(i)) for i in k])
    return _compose(u, series)


def jlog(u: Jet) -> Jet:
    u0 = u.value
    if u0 <= 0.0:
        raise ValueError(f"log of non-positive jet value {u0}")
    series = np.empty(u.order + 1)
    series[0] = math.log(u0)
    for k in range(1, u.order + 1):
        series[k] = (-1.0) ** (k + 1) / (k * u0**k)
    return _compose(u, series)


def _reciprocal(u: Jet) -> Jet:
    u0 = u.value
    if u0 == 0.0:
        raise ZeroDivisionError("division by a jet with zero value part")
    series = np.empty(u.order + 1)
    series[0] = 1.0 / u0
    for k in range(1, u.order + 1):
        series[k] = -series[k - 1] / u0
    return _compose(u, series)


def jpow(u: Jet, exponent) -> Jet:
    """u ** exponent for real exponents (integer exponents allow any value part)."""
    p = float(exponent)
    if p == 0.0:
        return constant(u.tab, 1.0)
    if p == int(p) and abs(p) <= 64:
        n = int(abs(p))
        acc = u
        for _ in range(n - 1):
            acc = acc * u
        return _reciprocal(acc) if p < 0 else acc
    u0 = u.value
    if u0 <= 0.0:
        raise ValueError(f"fractional power of non-positive jet value {u0}")
    series = np.empty(u.order + 1)
    series[0] = u0**p
    for k in range(1, u.order + 1):
        series[k] = series[k - 1] * (p - k + 1) / (k * u0)
    return _compose(u, series)


def jsqrt(u: Jet) -> Jet:
    return jpow(u, 0.5)
