"""Truncated Taylor arithmetic and curve sources with derivative jets.

A :class:`Taylor` holds normalized Taylor coefficients ``c[k] = f^(k)(s)/k!``
of a scalar or vector function about one parameter value.  Products use the
Cauchy convolution, so derived quantities (normalized rulings, striction
curves, distribution parameters) get exact higher derivatives from the
derivatives of the input curves.
"""
from __future__ import annotations

from math import factorial
from typing import Callable, Sequence

import numpy as np
import sympy as sp
from scipy.interpolate import CubicSpline


class Taylor:
    __slots__ = ("c",)

    def __init__(self, coeffs):
        self.c = np.asarray(coeffs, dtype=float)

    @classmethod
    def from_derivatives(cls, derivs) -> "Taylor":
        d = np.asarray(derivs, dtype=float)
        fact = np.array([factorial(k) for k in range(d.shape[0])], dtype=float)
        return cls(d / fact.reshape((-1,) + (1,) * (d.ndim - 1)))

    @classmethod
    def constant(cls, value, order: int) -> "Taylor":
        value = np.asarray(value, dtype=float)
        c = np.zeros((order + 1,) + value.shape)
        c[0] = value
        return cls(c)

    @property
    def order(self) -> int:
        return self.c.shape[0] - 1

    @property
    def value(self):
        v = self.c[0]
        return float(v) if np.ndim(v) == 0 else v.copy()

    def derivatives(self) -> np.ndarray:
        fact = np.array([factorial(k) for k in range(self.order + 1)], dtype=float)
        return self.c * fact.reshape((-1,) + (1,) * (self.c.ndim - 1))

    def truncate(self, order: int) -> "Taylor":
        return Taylor(self.c[: order + 1])

    def D(self) -> "Taylor":
        """Derivative; loses one order."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 jet")
        k = np.arange(1, self.order + 1, dtype=float)
        return Taylor(self.c[1:] * k.reshape((-1,) + (1,) * (self.c.ndim - 1)))

    def _coerce(self, other):
        if isinstance(other, Taylor):
            m = min(self.order, other.order)
            return self.c[: m + 1], other.c[: m + 1]
        return self.c, None

    def __add__(self, other):
        a, b = self._coerce(other)
        if b is None:
            c = a.copy()
            c[0] = c[0] + other
            return Taylor(c)
        return Taylor(a + b)

    __radd__ = __add__

    def __neg__(self):
        return Taylor(-self.c)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Taylor):
            return Taylor(self.c * other)
        a, b = self._coerce(other)
        # scalar jets broadcast against vector jets
        if a.ndim < b.ndim:
            a = a.reshape(a.shape + (1,) * (b.ndim - a.ndim))
        elif b.ndim < a.ndim:
            b = b.reshape(b.shape + (1,) * (a.ndim - b.ndim))
        m = a.shape[0]
        out = np.zeros((m,) + np.broadcast_shapes(a.shape[1:], b.shape[1:]))
        for k in range(m):
            out[k] = sum(a[j] * b[k - j] for j in range(k + 1))
        return Taylor(out)

    __rmul__ = __mul__

    def reciprocal(self) -> "Taylor":
        a = self.c
        if a.ndim != 1:
            raise ValueError("reciprocal of a vector jet")
        if a[0] == 0:
            raise ZeroDivisionError("jet value is zero")
        r = np.zeros_like(a)
        r[0] = 1.0 / a[0]
        for k in range(1, a.shape[0]):
            r[k] = -sum(a[j] * r[k - j] for j in range(1, k + 1)) / a[0]
        return Taylor(r)

    def __truediv__(self, other):
        if isinstance(other, Taylor):
            return self * other.reciprocal()
        return Taylor(self.c / other)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def sqrt(self) -> "Taylor":
        a = self.c
        if a.ndim != 1 or a[0] <= 0:
            raise ValueError("sqrt needs a positive scalar jet")
        r = np.zeros_like(a)
        r[0] = np.sqrt(a[0])
        for k in range(1, a.shape[0]):
            r[k] = (a[k] - sum(r[j] * r[k - j] for j in range(1, k))) / (2 * r[0])
        return Taylor(r)

    def __repr__(self):
        return f"Taylor(order={self.order}, value={self.value!r})"


def tdot(u: Taylor, v: Taylor) -> Taylor:
    """Minkowski inner product of two vector jets."""
    m = min(u.order, v.order)
    a, b = u.c[: m + 1], v.c[: m + 1]
    sig = np.ones(a.shape[-1])
    sig[-1] = -1.0
    out = np.zeros(m + 1)
    for k in range(m + 1):
        out[k] = sum(np.dot(a[j] * sig, b[k - j]) for j in range(k + 1))
    return Taylor(out)


def tcross(u: Taylor, v: Taylor) -> Taylor:
    m = min(u.order, v.order)
    a, b = u.c[: m + 1], v.c[: m + 1]
    out = np.zeros((m + 1, 3))
    for k in range(m + 1):
        out[k] = sum(np.cross(a[j], b[k - j]) for j in range(k + 1))
    out[:, 2] = -out[:, 2]
    return Taylor(out)


def ttriple(u: Taylor, v: Taylor, w: Taylor) -> Taylor:
    """det(u, v, w) as a scalar jet (equals <u x v, w>)."""
    return tdot(tcross(u, v), w)


class Curve:
    """A parametrized curve s -> R^dim with access to derivative jets."""

    dim: int

    def derivatives(self, s: float, order: int) -> np.ndarray:
        """Array of shape (order+1, dim): value and derivatives at s."""
        raise NotImplementedError

    def taylor(self, s: float, order: int) -> Taylor:
        return Taylor.from_derivatives(self.derivatives(s, order))

    def __call__(self, s: float) -> np.ndarray:
        return self.derivatives(s, 0)[0]

    def jet(self, s: float):
        d = self.derivatives(s, 2)
        return d[0], d[1], d[2]


class SymbolicCurve(Curve):
    """Curve given by sympy expressions in one symbol; derivatives are exact."""

    def __init__(self, exprs: Sequence, symbol: sp.Symbol):
        self.exprs = [sp.sympify(e) for e in exprs]
        self.symbol = symbol
        self.dim = len(self.exprs)
        self._funcs: list[Callable] = []

    def _func(self, k: int):
        while len(self._funcs) <= k:
            j = len(self._funcs)
            ders = [sp.diff(e, self.symbol, j) for e in self.exprs]
            self._funcs.append(sp.lambdify(self.symbol, ders, "numpy"))
        return self._funcs[k]

    def derivatives(self, s, order):
        return np.array([np.asarray(self._func(k)(float(s)), dtype=float) for k in range(order + 1)])

    def __repr__(self):
        return f"SymbolicCurve({self.exprs})"


class SplineCurve(Curve):
    """C^2 cubic-spline interpolant through sampled points (not-a-knot ends).

    Derivatives above the third vanish identically; the third is piecewise
    constant.
    """

    def __init__(self, s_samples, points):
        s_samples = np.asarray(s_samples, dtype=float)
        points = np.asarray(points, dtype=float)
        if np.any(np.diff(s_samples) <= 0):
            raise ValueError("sample parameters must be strictly increasing")
        self.spline = CubicSpline(s_samples, points, axis=0)
        self.dim = points.shape[1]
        self.s_range = (float(s_samples[0]), float(s_samples[-1]))

    def derivatives(self, s, order):
        out = np.zeros((order + 1, self.dim))
        for k in range(min(order, 3) + 1):
            out[k] = self.spline(s, k)
        return out


class CallableCurve(Curve):
    """Position-only curve; derivatives from a least-squares Taylor fit on a stencil."""

    def __init__(self, fn: Callable[[float], np.ndarray], h: float = 1e-2, dim: int | None = None):
        self.fn = fn
        self.h = h
        self.dim = dim if dim is not None else len(np.asarray(fn(0.0)))

    def derivatives(self, s, order):
        m = order + 2
        offs = np.arange(-m, m + 1) * self.h
        V = np.vander(offs, order + 3, increasing=True)
        Y = np.array([np.asarray(self.fn(s + o), dtype=float) for o in offs])
        coef, *_ = np.linalg.lstsq(V, Y, rcond=None)
        fact = np.array([factorial(k) for k in range(order + 1)], dtype=float)
        return coef[: order + 1] * fact[:, None]


class TaylorCurve(Curve):
    """Curve defined by a jet-valued function, e.g. a normalized ruling.

    ``func(s, order)`` must return a :class:`Taylor` of at least ``order``;
    ``loss`` extra orders are requested from the underlying sources.
    """

    def __init__(self, func: Callable[[float, int], Taylor], dim: int = 3, loss: int = 0):
        self.func = func
        self.dim = dim
        self.loss = loss

    def taylor(self, s, order):
        return self.func(s, order + self.loss).truncate(order)

    def derivatives(self, s, order):
        return self.taylor(s, order).derivatives()


def constant_curve(vec) -> SymbolicCurve:
    s = sp.Symbol("s")
    return SymbolicCurve([sp.Float(float(v)) for v in vec], s)
