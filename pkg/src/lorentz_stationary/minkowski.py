"""Linear algebra of Lorentz-Minkowski space L^{n+1}.

Vectors are plain float arrays whose last component is the timelike one, so
the metric is diag(1, ..., 1, -1).
"""
from __future__ import annotations

import enum
from typing import Iterable

import numpy as np

from .errors import DimensionError, OnConeError

DEFAULT_TOL = 1e-9


class CausalClass(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"
    ZERO = "zero"


class ConeRegion(enum.Enum):
    CPLUS = "C+"
    CMINUS = "C-"
    ON_CONE = "cone"

    @property
    def sign(self) -> int:
        """+1 on C^+ (<p,p> < 0), -1 on C^-; undefined on the cone."""
        if self is ConeRegion.CPLUS:
            return 1
        if self is ConeRegion.CMINUS:
            return -1
        raise OnConeError("region sign undefined on the lightlike cone")


def mvec(*components) -> np.ndarray:
    """Build a validated vector of L^{n+1}."""
    if len(components) == 1 and np.ndim(components[0]) == 1:
        components = components[0]
    v = np.asarray(components, dtype=float)
    if v.ndim != 1 or v.shape[0] < 2:
        raise DimensionError(f"need a 1-d vector with dim >= 2, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector components must be finite")
    return v


def metric(dim: int) -> np.ndarray:
    g = np.ones(dim)
    g[-1] = -1.0
    return np.diag(g)


def mink_dot(u, v) -> float | np.ndarray:
    """Minkowski inner product; broadcasts over leading axes."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape[-1] != v.shape[-1]:
        raise DimensionError(f"dimension mismatch: {u.shape[-1]} vs {v.shape[-1]}")
    out = np.sum(u[..., :-1] * v[..., :-1], axis=-1) - u[..., -1] * v[..., -1]
    return float(out) if np.ndim(out) == 0 else out


def mink_norm(p) -> float:
    return float(np.sqrt(abs(mink_dot(p, p))))


def causal_class(v, tol: float = DEFAULT_TOL) -> CausalClass:
    v = np.asarray(v, dtype=float)
    e2 = float(v @ v)
    if e2 == 0.0:
        return CausalClass.ZERO
    q = mink_dot(v, v)
    if q > tol * e2:
        return CausalClass.SPACELIKE
    if q < -tol * e2:
        return CausalClass.TIMELIKE
    return CausalClass.LIGHTLIKE


def cone_region(p, tol: float = DEFAULT_TOL) -> ConeRegion:
    q = mink_dot(p, p)
    if q < -tol:
        return ConeRegion.CPLUS
    if q > tol:
        return ConeRegion.CMINUS
    return ConeRegion.ON_CONE


def _check3(*vs):
    for v in vs:
        if np.shape(v)[-1] != 3:
            raise DimensionError("operation defined only in L^3")


def triple(u, v, w) -> float:
    """Determinant of the matrix with rows u, v, w (L^3 only)."""
    _check3(u, v, w)
    return float(np.linalg.det(np.array([u, v, w], dtype=float)))


def lorentz_cross(u, v) -> np.ndarray:
    """The vector u x v with <u x v, w> = det(u, v, w) for every w."""
    _check3(u, v)
    c = np.cross(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
    c[..., -1] = -c[..., -1]
    return c


def lorentz_normal(tangents) -> np.ndarray:
    """Generalized cross product of n vectors in L^{n+1}.

    Returns the vector c with <c, w> = det(t_1, ..., t_n, w); for n = 2 it
    coincides with :func:`lorentz_cross`.
    """
    T = np.asarray(tangents, dtype=float)
    n, dim = T.shape
    if dim != n + 1:
        raise DimensionError(f"need n vectors in dimension n+1, got {T.shape}")
    # Euclidean cofactor vector: e_k component is det with w = e_k
    c = np.empty(dim)
    for k in range(dim):
        minor = np.delete(T, k, axis=1)
        c[k] = (-1) ** (n + k) * np.linalg.det(minor)
    c[-1] = -c[-1]
    return c


def inversion(p, tol: float = DEFAULT_TOL) -> np.ndarray:
    """phi(p) = p / <p,p>, defined off the lightlike cone."""
    p = np.asarray(p, dtype=float)
    q = mink_dot(p, p)
    if abs(q) <= tol * max(1.0, float(p @ p)):
        raise OnConeError(f"inversion undefined on the cone (<p,p> = {q:g})")
    return p / q


def inversion_differential(p, v, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Exact derivative of the inversion at p applied to v.

    d(phi)_p(v) = v/<p,p> - 2 <p,v> p / <p,p>^2, so that
    <dphi v, dphi v> = <v,v> / <p,p>^2.
    """
    p = np.asarray(p, dtype=float)
    v = np.asarray(v, dtype=float)
    q = mink_dot(p, p)
    if abs(q) <= tol * max(1.0, float(p @ p)):
        raise OnConeError(f"inversion undefined on the cone (<p,p> = {q:g})")
    return v / q - 2.0 * mink_dot(p, v) * p / q**2


def far_from_cone(points: Iterable, delta: float) -> bool:
    """True iff every point lies in C_delta (cone with vertex (0,...,0,delta))."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    P = np.atleast_2d(np.asarray(list(points), dtype=float))
    val = np.sum(P[:, :-1] ** 2, axis=1) - (P[:, -1] - delta) ** 2
    return bool(np.all(val < 0))
