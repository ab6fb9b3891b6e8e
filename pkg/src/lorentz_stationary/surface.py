"""Chart jets, fundamental forms, mean curvature and the stationarity residual.

Conventions follow the trace convention for the mean curvature:
``H = eps * trace(g^{-1} h)`` with ``h_ij = <X_ij, N>`` and ``eps = <N, N>``,
so the hyperbolic plane H^n(r) has H = n/r for N = p/r and the pseudosphere
S^n_1(r) has H = n/r for N = -p/r.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

import numpy as np
import sympy as sp

from .errors import DegenerateMetric, IndeterminateAlpha, OnConeError, WrongCausalType
from .minkowski import lorentz_cross, lorentz_normal, mink_dot, triple

CONE_BAND = 1e-6
DEGENERACY_BAND = 1e-9
ALPHA_BAND = 1e-9
DEFAULT_H = 1e-4


@dataclass(frozen=True)
class HyperJet:
    """Position, first and second partials of a hypersurface chart at one point.

    Shapes: ``X`` (n+1,), ``dX`` (n, n+1), ``ddX`` (n, n, n+1).
    """

    X: np.ndarray
    dX: np.ndarray
    ddX: np.ndarray

    @property
    def n(self) -> int:
        return self.dX.shape[0]

    def scaled(self, lam: float) -> "HyperJet":
        return HyperJet(lam * self.X, lam * self.dX, lam * self.ddX)


@dataclass(frozen=True)
class ChartJet2:
    """Second-order jet of a surface chart X(s, t) in L^3."""

    X: np.ndarray
    Xs: np.ndarray
    Xt: np.ndarray
    Xss: np.ndarray
    Xst: np.ndarray
    Xtt: np.ndarray

    @property
    def n(self) -> int:
        return 2

    def to_hyper(self) -> HyperJet:
        return HyperJet(
            np.asarray(self.X, float),
            np.array([self.Xs, self.Xt], float),
            np.array([[self.Xss, self.Xst], [self.Xst, self.Xtt]], float),
        )

    @classmethod
    def from_hyper(cls, j: HyperJet) -> "ChartJet2":
        return cls(j.X, j.dX[0], j.dX[1], j.ddX[0, 0], j.ddX[0, 1], j.ddX[1, 1])

    def scaled(self, lam: float) -> "ChartJet2":
        return ChartJet2(*(lam * np.asarray(v) for v in (self.X, self.Xs, self.Xt, self.Xss, self.Xst, self.Xtt)))


def as_hyper(jet) -> HyperJet:
    return jet.to_hyper() if isinstance(jet, ChartJet2) else jet


@dataclass(frozen=True)
class FundamentalForms:
    E: float
    F: float
    G: float
    e: float
    f: float
    g: float
    eps_normal: int
    N: np.ndarray

    @property
    def det(self) -> float:
        return self.E * self.G - self.F**2


# ---------------------------------------------------------------- jets


def jets_from_position(pos_fn: Callable, s: float, t: float, h: float = DEFAULT_H) -> ChartJet2:
    """Central second-order finite differences of a position-only chart."""
    return ChartJet2.from_hyper(hyper_jet_from_position(lambda u: pos_fn(u[0], u[1]), (s, t), h))


def hyper_jet_from_position(pos_fn: Callable, u: Sequence[float], h: float = DEFAULT_H) -> HyperJet:
    if h <= 0:
        raise ValueError("step must be positive")
    u = np.asarray(u, dtype=float)
    n = u.shape[0]
    e = np.eye(n) * h

    def P(v):
        return np.asarray(pos_fn(v), dtype=float)

    X = P(u)
    dX = np.array([(P(u + e[i]) - P(u - e[i])) / (2 * h) for i in range(n)])
    ddX = np.empty((n, n, X.shape[0]))
    for i in range(n):
        ddX[i, i] = (P(u + e[i]) - 2 * X + P(u - e[i])) / h**2
        for j in range(i + 1, n):
            d = (P(u + e[i] + e[j]) - P(u + e[i] - e[j]) - P(u - e[i] + e[j]) + P(u - e[i] - e[j])) / (4 * h * h)
            ddX[i, j] = ddX[j, i] = d
    return HyperJet(X, dX, ddX)


# ---------------------------------------------------------------- forms


def _check_metric(g: np.ndarray):
    n = g.shape[0]
    scale = np.sum(np.triu(g) ** 2) ** (n / 2)
    d = np.linalg.det(g)
    if abs(d) <= DEGENERACY_BAND * max(scale, 1e-300):
        raise DegenerateMetric(f"induced metric is singular (det = {d:.3g})")
    return d


def fundamental_forms(jet: ChartJet2) -> FundamentalForms:
    E = mink_dot(jet.Xs, jet.Xs)
    F = mink_dot(jet.Xs, jet.Xt)
    G = mink_dot(jet.Xt, jet.Xt)
    W = E * G - F * F
    if abs(W) <= DEGENERACY_BAND * (E * E + F * F + G * G):
        raise DegenerateMetric(f"EG - F^2 = {W:.3g}")
    root = np.sqrt(abs(W))
    N = lorentz_cross(jet.Xs, jet.Xt) / root
    e = triple(jet.Xs, jet.Xt, jet.Xss) / root
    f = triple(jet.Xs, jet.Xt, jet.Xst) / root
    g = triple(jet.Xs, jet.Xt, jet.Xtt) / root
    return FundamentalForms(E, F, G, e, f, g, -int(np.sign(W)), N)


def unit_normal(jet) -> tuple[np.ndarray, int]:
    """Normal from the (generalized) Lorentz cross product of the tangents."""
    j = as_hyper(jet)
    g = np.array([[mink_dot(a, b) for b in j.dX] for a in j.dX])
    _check_metric(g)
    c = lorentz_normal(j.dX)
    q = mink_dot(c, c)
    return c / np.sqrt(abs(q)), int(np.sign(q))


def shape_matrix(jet) -> tuple[np.ndarray, np.ndarray, int]:
    """(eps * g^{-1} h, N, eps) for the cross-product orientation."""
    j = as_hyper(jet)
    g = np.array([[mink_dot(a, b) for b in j.dX] for a in j.dX])
    _check_metric(g)
    N, eps = unit_normal(j)
    h = np.array([[mink_dot(j.ddX[a, b], N) for b in range(j.n)] for a in range(j.n)])
    return eps * np.linalg.solve(g, h), N, eps


def mean_curvature(jet) -> float:
    """Trace-convention mean curvature with respect to the cross-product normal."""
    if isinstance(jet, ChartJet2):
        ff = fundamental_forms(jet)
        return ff.eps_normal * (ff.e * ff.G - 2 * ff.f * ff.F + ff.g * ff.E) / ff.det
    S, _, _ = shape_matrix(jet)
    return float(np.trace(S))


def principal_curvatures(jet) -> np.ndarray | None:
    """Real eigenvalues of the shape operator (sorted), or None if not diagonalizable over R."""
    S, _, _ = shape_matrix(jet)
    vals, vecs = np.linalg.eig(S)
    if np.max(np.abs(vals.imag)) > 1e-9 * (1 + np.max(np.abs(vals))):
        return None
    if np.linalg.cond(vecs) > 1e8:
        return None
    return np.sort(vals.real)


def _normal_H(jet):
    j = as_hyper(jet)
    X = j.X
    q = mink_dot(X, X)
    if abs(q) < CONE_BAND * (1 + X @ X):
        raise OnConeError(f"<X,X> = {q:.3g} inside the cone band")
    if isinstance(jet, ChartJet2):
        ff = fundamental_forms(jet)
        H = ff.eps_normal * (ff.e * ff.G - 2 * ff.f * ff.F + ff.g * ff.E) / ff.det
        N = ff.N
    else:
        S, N, _ = shape_matrix(j)
        H = float(np.trace(S))
    return H, N, q


def stationarity_residual(jet, alpha: float) -> float:
    """H + alpha <N,X> / |<X,X>|; zero exactly where the chart is alpha-stationary."""
    H, N, q = _normal_H(jet)
    return H + alpha * mink_dot(N, as_hyper(jet).X) / abs(q)


def fit_alpha(jet) -> float:
    """The unique alpha making the residual vanish at this point."""
    H, N, q = _normal_H(jet)
    X = as_hyper(jet).X
    h = mink_dot(N, X)
    if abs(h) <= ALPHA_BAND * np.sqrt(1 + X @ X):
        raise IndeterminateAlpha("<N,X> = 0: every alpha works here")
    return -H * abs(q) / h


# ---------------------------------------------------------------- graphs


def graph_residual(u: float, Du, D2u, q, alpha: float, kind: str = "spacelike") -> float:
    """Left minus right side of the Euler-Lagrange equation for x_{n+1} = u(q).

    spacelike: alpha (q.Du - u)/sqrt(1-|Du|^2) + |<X,X>| div(Du/sqrt(1-|Du|^2))
    timelike:  div(Du/sqrt(|Du|^2-1)) - alpha (q.Du - u)/(|<X,X>| sqrt(|Du|^2-1))

    With |<X,X>| = u^2 - |q|^2 the spacelike form is the classical equation
    on C^+; the absolute value makes the same expression valid on C^-.
    """
    Du = np.asarray(Du, dtype=float)
    D2u = np.asarray(D2u, dtype=float)
    q = np.asarray(q, dtype=float)
    g2 = float(Du @ Du)
    xx = float(q @ q) - u * u
    if abs(xx) < CONE_BAND * (1 + q @ q + u * u):
        raise OnConeError("graph point on the lightlike cone")
    lap = float(np.trace(D2u))
    quad = float(Du @ D2u @ Du)
    support = float(q @ Du) - u
    if kind == "spacelike":
        if g2 >= 1:
            raise WrongCausalType(f"|Du|^2 = {g2:.3g} >= 1: not spacelike")
        rho = np.sqrt(1 - g2)
        div = lap / rho + quad / rho**3
        return alpha * support / rho + abs(xx) * div
    if kind == "timelike":
        if g2 <= 1:
            raise WrongCausalType(f"|Du|^2 = {g2:.3g} <= 1: not timelike")
        rho = np.sqrt(g2 - 1)
        div = lap / rho - quad / rho**3
        return div - alpha * support / (abs(xx) * rho)
    raise ValueError(f"unknown graph kind {kind!r}")


# ---------------------------------------------------------------- charts


@dataclass
class Chart:
    """A hypersurface chart over a parameter box.

    Subclasses provide :meth:`jet`; ``domain`` is a list of (lo, hi) pairs and
    ``default_shape`` the grid resolution used by scans.
    """

    domain: list
    default_shape: tuple = ()

    @property
    def n(self) -> int:
        return len(self.domain)

    def jet(self, *u):
        raise NotImplementedError

    def position(self, *u) -> np.ndarray:
        return as_hyper(self.jet(*u)).X

    def axes(self, shape=None) -> list[np.ndarray]:
        shape = shape or self.default_shape or (16,) * self.n
        if len(shape) != self.n:
            raise ValueError("grid shape does not match chart dimension")
        if min(shape) < 2:
            raise ValueError("grid sizes must be >= 2")
        return [np.linspace(lo, hi, k) for (lo, hi), k in zip(self.domain, shape)]

    def grid(self, shape=None) -> list[tuple]:
        return list(product(*self.axes(shape)))


class SymbolicChart(Chart):
    """Chart given by closed-form sympy expressions; jets are exact derivatives."""

    def __init__(self, exprs, params, domain, default_shape=()):
        super().__init__(list(domain), tuple(default_shape))
        self.exprs = [sp.sympify(e) for e in exprs]
        self.params = list(params)
        n = len(self.params)
        if len(self.exprs) != n + 1:
            raise ValueError("need n+1 coordinate expressions for n parameters")
        P = self.params
        self._X = sp.lambdify(P, self.exprs, "numpy")
        self._dX = sp.lambdify(P, [[sp.diff(e, a) for e in self.exprs] for a in P], "numpy")
        self._ddX = sp.lambdify(P, [[[sp.diff(e, a, b) for e in self.exprs] for b in P] for a in P], "numpy")

    def jet(self, *u):
        u = [float(x) for x in u]
        j = HyperJet(
            np.asarray(self._X(*u), dtype=float),
            np.asarray(self._dX(*u), dtype=float),
            np.asarray(self._ddX(*u), dtype=float),
        )
        return ChartJet2.from_hyper(j) if self.n == 2 else j

    def position(self, *u):
        return np.asarray(self._X(*[float(x) for x in u]), dtype=float)


class PositionChart(Chart):
    """Chart known only through positions; jets come from central differences."""

    def __init__(self, pos_fn: Callable, domain, default_shape=(), h: float = DEFAULT_H):
        super().__init__(list(domain), tuple(default_shape))
        self.pos_fn = pos_fn
        self.h = h

    def jet(self, *u):
        j = hyper_jet_from_position(lambda v: self.pos_fn(*v), u, self.h)
        return ChartJet2.from_hyper(j) if self.n == 2 else j

    def position(self, *u):
        return np.asarray(self.pos_fn(*u), dtype=float)
