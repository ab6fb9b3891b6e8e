"""Ruled surfaces X(s,t) = gamma(s) + t w(s) in L^3.

The stationarity equation multiplied through by <X,X> and EG - F^2 becomes a
polynomial identity in t,

    P(s,t) = H1 <X,X> - alpha eps_region eps_normal (EG - F^2) (X_s, X_t, X),

whose coefficients are recovered exactly by sampling six t-nodes.  A ruled
chart is alpha-stationary iff all coefficients vanish for every s.
"""
from __future__ import annotations

import csv
import enum
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import Polynomial

from .errors import (
    ClassMismatch,
    DegenerateMetric,
    DegenerateProbe,
    GeometryError,
    MixedClass,
    NonUnitizableRuling,
    OnConeError,
    VanishingWPrime,
)
from .jets import Curve, SplineCurve, Taylor, TaylorCurve, tcross, tdot, ttriple
from .minkowski import CausalClass, causal_class, mink_dot, triple
from .surface import CONE_BAND, DEGENERACY_BAND, ChartJet2, Chart

PROBE_NODES = np.array([-2.5, -1.5, -0.5, 0.5, 1.5, 2.5])
JET_ORDER = 4


class RulingClass(enum.Enum):
    CYLINDRICAL = "Cylindrical"
    NONLIGHTLIKE_W_NONLIGHTLIKE_WP = "NonLightlikeW_NonLightlikeWp"
    NONLIGHTLIKE_W_LIGHTLIKE_WP = "NonLightlikeW_LightlikeWp"
    LIGHTLIKE_W = "LightlikeW"


class RuledChart(Chart):
    """Chart of a ruled surface built from a base curve and a ruling field."""

    def __init__(self, gamma: Curve, w: Curve, s_range, t_range, default_shape=(64, 16)):
        super().__init__([tuple(s_range), tuple(t_range)], tuple(default_shape))
        self.gamma = gamma
        self.w = w

    @property
    def s_range(self):
        return self.domain[0]

    @property
    def t_range(self):
        return self.domain[1]

    def jet(self, s, t):
        return ruled_jet(self, s, t)

    def s_grid(self, k: int = 33) -> np.ndarray:
        return np.linspace(*self.s_range, k)

    def transformed(self, A=None, scale: float = 1.0) -> "RuledChart":
        """Image under the linear map ``scale * A`` (A a Lorentz isometry)."""
        A = np.eye(3) if A is None else np.asarray(A, dtype=float)
        M = scale * A
        g, w = self.gamma, self.w
        gc = TaylorCurve(lambda s, k: Taylor(g.taylor(s, k).c @ M.T))
        wc = TaylorCurve(lambda s, k: Taylor(w.taylor(s, k).c @ M.T))
        return RuledChart(gc, wc, self.s_range, tuple(scale * np.asarray(self.t_range)) if False else self.t_range,
                          self.default_shape)


def ruled_jet(chart: RuledChart, s: float, t: float) -> ChartJet2:
    g, g1, g2 = chart.gamma.jet(s)
    w, w1, w2 = chart.w.jet(s)
    return ChartJet2(g + t * w, g1 + t * w1, w, g2 + t * w2, w1, np.zeros(3))


def h1(jet: ChartJet2) -> float:
    """G (Xs,Xt,Xss) - 2F (Xs,Xt,Xst) + E (Xs,Xt,Xtt)."""
    E = mink_dot(jet.Xs, jet.Xs)
    F = mink_dot(jet.Xs, jet.Xt)
    G = mink_dot(jet.Xt, jet.Xt)
    return (
        G * triple(jet.Xs, jet.Xt, jet.Xss)
        - 2 * F * triple(jet.Xs, jet.Xt, jet.Xst)
        + E * triple(jet.Xs, jet.Xt, jet.Xtt)
    )


def _parts(jet: ChartJet2) -> tuple[float, float]:
    """(H1 <X,X>, (EG-F^2)(Xs,Xt,X)) at one point; P = first - alpha*sigma*second."""
    E = mink_dot(jet.Xs, jet.Xs)
    F = mink_dot(jet.Xs, jet.Xt)
    G = mink_dot(jet.Xt, jet.Xt)
    return h1(jet) * mink_dot(jet.X, jet.X), (E * G - F * F) * triple(jet.Xs, jet.Xt, jet.X)


def ruled_poly_value(chart: RuledChart, s, t, alpha, sigma) -> float:
    """Direct evaluation of P(s,t) with sigma = eps_region * eps_normal."""
    a, b = _parts(ruled_jet(chart, s, t))
    return a - alpha * sigma * b


def region_normal_signs(chart: RuledChart, s: float, t: float) -> tuple[int, int]:
    """(eps_region, eps_normal) measured at one chart point."""
    j = ruled_jet(chart, s, t)
    xx = mink_dot(j.X, j.X)
    if abs(xx) < CONE_BAND * (1 + j.X @ j.X):
        raise OnConeError(f"chart point ({s:g},{t:g}) on the cone")
    E, F, G = mink_dot(j.Xs, j.Xs), mink_dot(j.Xs, j.Xt), mink_dot(j.Xt, j.Xt)
    W = E * G - F * F
    if abs(W) <= DEGENERACY_BAND * (E * E + F * F + G * G):
        raise DegenerateMetric(f"EG-F^2 = {W:.3g} at ({s:g},{t:g})")
    return (1 if xx < 0 else -1), -int(np.sign(W))


@dataclass
class TPolynomial:
    """Coefficients A_0..A_5 of P(s, .) in powers of t, one row per s."""

    s: np.ndarray
    coeffs: np.ndarray
    alpha: float
    sigma: np.ndarray
    value_part: np.ndarray = field(repr=False, default=None)
    alpha_part: np.ndarray = field(repr=False, default=None)

    @property
    def degree(self) -> int:
        nz = np.nonzero(np.max(np.abs(self.coeffs), axis=0) > 1e-12 * (1 + np.max(np.abs(self.coeffs))))[0]
        return int(nz[-1]) if nz.size else 0

    def __call__(self, i: int, t):
        return Polynomial(self.coeffs[i])(t)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeffs)))


def _extract(values: np.ndarray, tau: np.ndarray, center: float, scale: float) -> np.ndarray:
    V = np.vander(tau, len(tau), increasing=True)
    a = np.linalg.solve(V, values)
    p = Polynomial(a)(Polynomial([-center / scale, 1.0 / scale]))
    out = np.zeros(len(tau))
    out[: len(p.coef)] = p.coef
    return out


def ruled_stationarity_poly(chart: RuledChart, s, alpha: float, eps_region=None, eps_normal=None,
                            nodes=None) -> TPolynomial:
    """Coefficients of P(s, t) in t at each requested s.

    Missing signs are measured at the middle of the chart's t-range.  Custom
    ``nodes`` are given in the scaled variable (six distinct values).
    """
    s_arr = np.atleast_1d(np.asarray(s, dtype=float))
    tau = PROBE_NODES if nodes is None else np.asarray(nodes, dtype=float)
    if len(tau) != 6 or len(np.unique(tau)) != 6:
        raise DegenerateProbe("need six distinct probe nodes")
    t0, t1 = chart.t_range
    center = 0.5 * (t0 + t1)
    scale = max(0.5 * (t1 - t0), 1e-3) / 2.5
    ts = center + scale * tau
    A = np.empty((len(s_arr), 6))
    B = np.empty((len(s_arr), 6))
    sig = np.empty(len(s_arr))
    for i, si in enumerate(s_arr):
        er, en = eps_region, eps_normal
        if er is None or en is None:
            mr, mn = region_normal_signs(chart, si, center)
            er = mr if er is None else er
            en = mn if en is None else en
        sig[i] = er * en
        parts = np.array([_parts(ruled_jet(chart, si, t)) for t in ts])
        A[i] = _extract(parts[:, 0], tau, center, scale)
        B[i] = sig[i] * _extract(parts[:, 1], tau, center, scale)
    return TPolynomial(s_arr, A - alpha * B, alpha, sig, A, B)


# ---------------------------------------------------------------- classes


def ruling_class(chart: RuledChart, tol: float = 1e-9, samples: int = 33) -> RulingClass:
    classes_w, classes_wp = set(), set()
    moving = []
    for s in chart.s_grid(samples):
        _, _, _ = chart.gamma.jet(s)
        w, w1, _ = chart.w.jet(s)
        if not np.any(w):
            raise GeometryError("ruling vanishes")
        moving.append(np.linalg.norm(w1) > 1e3 * tol * np.linalg.norm(w))
        classes_w.add(causal_class(w, tol) is CausalClass.LIGHTLIKE)
        classes_wp.add(causal_class(w1, tol) if np.linalg.norm(w1) > 1e3 * tol * np.linalg.norm(w) else None)
    if not any(moving):
        return RulingClass.CYLINDRICAL
    if not all(moving):
        raise MixedClass("ruling derivative vanishes on part of the interval")
    if len(classes_w) > 1:
        raise MixedClass("ruling changes between lightlike and non-lightlike")
    if classes_w == {True}:
        return RulingClass.LIGHTLIKE_W
    light = {c is CausalClass.LIGHTLIKE for c in classes_wp}
    if len(light) > 1:
        raise MixedClass("causal type of w' changes along the interval")
    if light == {True}:
        return RulingClass.NONLIGHTLIKE_W_LIGHTLIKE_WP
    if {CausalClass.SPACELIKE, CausalClass.TIMELIKE} <= classes_wp:
        raise MixedClass("w' changes between spacelike and timelike")
    return RulingClass.NONLIGHTLIKE_W_NONLIGHTLIKE_WP


# ---------------------------------------------------------------- normalizations


@dataclass
class NormalizedPoint:
    """Normalized ruling data at one s; primes are derivatives in the unit-speed parameter."""

    gamma: np.ndarray
    dgamma: np.ndarray
    ddgamma: np.ndarray
    w: np.ndarray
    dw: np.ndarray
    ddw: np.ndarray
    delta: int
    mu: int
    F: float
    Q: float
    dQ: float
    kappa_g: float
    a: float
    b: float
    c: float
    da: float
    shift: float
    speed: float


class RuledNormalization:
    """Unit ruling, unit-speed spherical indicatrix and striction base curve.

    The ruling is rescaled to |<w,w>| = 1, the parameter is changed locally so
    that |<w',w'>| = 1 and gamma is replaced by gamma + u w with
    u = -<gamma',w'>/<w',w'>, so that <gamma', w'> = 0.  All derived
    quantities come out of exact jet arithmetic.
    """

    def __init__(self, chart: RuledChart, order: int = JET_ORDER):
        self.chart = chart
        self.order = order
        s_grid = chart.s_grid()
        d = {int(np.sign(mink_dot(chart.w(s), chart.w(s)))) for s in s_grid}
        if len(d) != 1 or 0 in d:
            raise NonUnitizableRuling("<w,w> changes sign or vanishes")
        self.delta = d.pop()
        mus = {self._raw(s)[1] for s in s_grid}
        if len(mus) != 1:
            raise MixedClass("<w',w'> changes sign")
        self.mu = mus.pop()

    def _raw(self, s):
        K = self.order
        w = self.chart.w.taylor(s, K)
        wn = w / (self.delta_or(w) * tdot(w, w)).sqrt()
        wp = wn.D()
        m = tdot(wp, wp)
        mu = int(np.sign(m.value))
        if mu == 0:
            raise ClassMismatch("w' is lightlike")
        lam = (mu * m).sqrt()
        return wn, mu, lam

    def delta_or(self, w: Taylor) -> int:
        return getattr(self, "delta", int(np.sign(tdot(w, w).value)))

    def jets(self, s):
        """Jets (in s) of normalized quantities; d/dsigma = (1/lambda) d/ds."""
        wn, mu, lam = self._raw(s)
        gamma = self.chart.gamma.taylor(s, self.order)

        def Ds(f):
            return f.D() / lam

        w1 = Ds(wn)
        u = -mu * tdot(Ds(gamma), w1)
        gt = gamma + u * wn
        return dict(w=wn, w1=w1, w2=Ds(w1), g=gt, g1=Ds(gt), g2=Ds(Ds(gt)), lam=lam, u=u, Ds=Ds)

    def at(self, s: float) -> NormalizedPoint:
        J = self.jets(s)
        wn, w1, w2, g, g1 = J["w"], J["w1"], J["w2"], J["g"], J["g1"]
        Q = ttriple(g1, wn, w1)
        a = self.mu * tdot(g, w1)
        b = tdot(g, tcross(wn, w1)) / (-self.delta * self.mu)
        c = self.delta * tdot(g, wn)
        return NormalizedPoint(
            gamma=g.value, dgamma=g1.value, ddgamma=J["g2"].value,
            w=wn.value, dw=w1.value, ddw=w2.value,
            delta=self.delta, mu=self.mu,
            F=tdot(g1, wn).value, Q=Q.value, dQ=J["Ds"](Q).value,
            kappa_g=ttriple(w2, w1, wn).value,
            a=a.value, b=b.value, c=c.value, da=J["Ds"](a).value,
            shift=J["u"].value, speed=J["lam"].value,
        )

    def normalized_chart(self) -> RuledChart:
        """Chart of gamma~ + t w~ in the original parameter s.

        Reparametrizing s only multiplies P by speed**3, so coefficient
        comparisons with :func:`thnli_coeffs` are unaffected up to that factor.
        """
        c = self.chart

        def w_new(s, k):
            w = c.w.taylor(s, k)
            return w / (self.delta * tdot(w, w)).sqrt()

        def g_new(s, k):
            w = w_new(s, k)
            w1 = w.D()
            m = tdot(w1, w1)
            g = c.gamma.taylor(s, k)
            u = -tdot(g.D(), w1) / m
            return g + u * w

        return RuledChart(TaylorCurve(g_new, loss=1), TaylorCurve(w_new), c.s_range, c.t_range,
                          c.default_shape)

    def sample(self, s_grid) -> dict:
        pts = [self.at(s) for s in s_grid]
        keys = ["F", "Q", "dQ", "kappa_g", "a", "b", "c", "da", "shift", "speed"]
        return {k: np.array([getattr(p, k) for p in pts]) for k in keys}

    def Q(self, s):
        return self.at(s).Q

    def kappa_g(self, s):
        return self.at(s).kappa_g


def normalize_nonlightlike(chart: RuledChart, tol: float = 1e-9) -> RuledNormalization:
    cls = ruling_class(chart, tol)
    if cls is not RulingClass.NONLIGHTLIKE_W_NONLIGHTLIKE_WP:
        raise ClassMismatch(f"expected non-lightlike w and w', got {cls.value}")
    return RuledNormalization(chart)


def normalize_lightlike(chart: RuledChart, tol: float = 1e-9) -> RuledChart:
    """Rescale the lightlike ruling to <w',w'> = 1 and shift gamma to <gamma',w'> = 0.

    For lightlike w the rescaling w -> w/lambda already makes the new
    derivative unit (cross terms vanish since <w,w> = <w,w'> = 0), so only the
    t-parameter changes.  The base curve shift is u = -<gamma',w'>.
    """
    cls = ruling_class(chart, tol)
    if cls is not RulingClass.LIGHTLIKE_W:
        raise ClassMismatch(f"expected lightlike ruling, got {cls.value}")
    for s in chart.s_grid():
        if mink_dot(chart.w.jet(s)[1], chart.w.jet(s)[1]) <= 0:
            raise VanishingWPrime("w' vanishes or is not spacelike")

    def w_new(s, k):
        w = chart.w.taylor(s, k)
        wp = w.D()
        return w / tdot(wp, wp).sqrt()

    def g_new(s, k):
        w = w_new(s, k)
        g = chart.gamma.taylor(s, k)
        u = -tdot(g.D(), w.D())
        return g + u * w

    t0, t1 = chart.t_range
    lam = np.sqrt(np.mean([mink_dot(chart.w.jet(s)[1], chart.w.jet(s)[1]) for s in chart.s_grid()]))
    return RuledChart(TaylorCurve(g_new, loss=2), TaylorCurve(w_new, loss=1), chart.s_range,
                      (t0 * lam, t1 * lam), chart.default_shape)


# ---------------------------------------------------------------- closed-form coefficients


def thnli_coeffs(norm: RuledNormalization, s: float, alpha: float, beta: int) -> np.ndarray:
    """A_0..A_4 of the non-lightlike case in the striction/unit normalization."""
    p = norm.at(s)
    g, g1, w, w1 = p.gamma, p.dgamma, p.w, p.dw
    gg, gw = mink_dot(g, g), mink_dot(g, w)
    T0 = triple(g1, w, g)
    T1 = triple(w1, w, g)
    k, d, m = alpha * beta, p.delta, p.mu
    A0 = p.Q * p.F * gg + k * m * p.Q**2 * T0
    A1 = 2 * p.F * p.Q * gw + d * p.dQ * gg + k * m * p.Q**2 * T1
    A2 = 2 * d * p.dQ * gw + d * p.Q * p.F - k * d * m * T0
    A3 = p.dQ - k * d * m * T1
    A4 = p.kappa_g
    return np.array([A0, A1, A2, A3, A4])


def thli_coeffs(chart: RuledChart, s: float, alpha: float, eps_region: int) -> tuple[float, float]:
    """A_0, A_1 of the lightlike-ruling case (chart assumed normalized)."""
    g, g1, _ = chart.gamma.jet(s)
    w, w1, _ = chart.w.jet(s)
    q = triple(g1, w, w1)
    gw1 = mink_dot(g1, w)
    ae = alpha * eps_region
    A0 = 2 * mink_dot(g, g) * q - ae * gw1 * triple(g1, w, g)
    A1 = 4 * mink_dot(g, w) * q - ae * gw1 * triple(w1, w, g)
    return A0, A1


def thli_identity(chart: RuledChart, s: float) -> float:
    """<g,g>(w',w,g) - 2<g,w>(g',w,g)."""
    g, g1, _ = chart.gamma.jet(s)
    w, w1, _ = chart.w.jet(s)
    return mink_dot(g, g) * triple(w1, w, g) - 2 * mink_dot(g, w) * triple(g1, w, g)


def cylinder_triples(chart: RuledChart, s: float) -> tuple[float, float]:
    """((gamma', w, gamma''), (gamma', w, gamma)) for a constant ruling."""
    g, g1, g2 = chart.gamma.jet(s)
    w = chart.w(s)
    return triple(g1, w, g2), triple(g1, w, g)


# ---------------------------------------------------------------- classification


@dataclass
class AlphaFit:
    alpha: float | None
    indeterminate: bool
    stationary: bool
    relative_residual: float


def fit_alpha_poly(poly: TPolynomial, rtol: float = 1e-6) -> AlphaFit:
    """Least-squares alpha over every (s, n) coefficient equation a - alpha b = 0."""
    a = poly.value_part.ravel()
    b = poly.alpha_part.ravel()
    sa, sb = np.max(np.abs(a)), np.max(np.abs(b))
    scale = max(sa, sb, 1e-300)
    if sb <= 1e-9 * scale or sb < 1e-12:
        ok = sa <= rtol * max(scale, 1.0)
        return AlphaFit(None, ok, ok, float(sa / max(scale, 1.0)))
    alpha = float(a @ b / (b @ b))
    res = np.max(np.abs(a - alpha * b))
    scale = max(sa, sb * max(1.0, abs(alpha)))
    rel = float(res / scale)
    return AlphaFit(alpha, False, rel <= rtol, rel)


@dataclass
class ClassificationReport:
    ruling_class: RulingClass
    stationary: bool
    alpha: float | None
    alpha_indeterminate: bool
    branch: str
    relative_residual: float
    sigma: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "Stationary" if self.stationary else "NotStationary"

    def to_dict(self) -> dict:
        return {
            "ruling_class": self.ruling_class.value,
            "verdict": self.verdict,
            "alpha": self.alpha,
            "alpha_indeterminate": self.alpha_indeterminate,
            "branch": self.branch,
            "relative_residual": self.relative_residual,
            "sign_products": sorted(set(int(x) for x in self.sigma)),
            "details": self.details,
        }


def _consistent_sigma(chart: RuledChart, s_grid) -> None:
    ts = np.linspace(*chart.t_range, 5)
    for s in s_grid:
        prods = {np.prod(region_normal_signs(chart, s, t)) for t in ts}
        if len(prods) > 1:
            raise MixedClass(f"sign of eps_region*eps_normal changes along the ruling at s={s:g}")


def classify_ruled(chart: RuledChart, tol: float = 1e-9, rtol: float = 1e-6, samples: int = 33) -> ClassificationReport:
    """Ruling class, fitted alpha and the matching classification branch."""
    cls = ruling_class(chart, tol, samples)
    s_grid = chart.s_grid(samples)
    _consistent_sigma(chart, s_grid)
    poly = ruled_stationarity_poly(chart, s_grid, 0.0)
    fit = fit_alpha_poly(poly, rtol)
    details: dict = {}
    report = ClassificationReport(cls, fit.stationary, fit.alpha, fit.indeterminate, "none",
                                  fit.relative_residual, list(poly.sigma), details)

    if cls is RulingClass.CYLINDRICAL:
        tr = np.array([cylinder_triples(chart, s) for s in s_grid])
        scale = 1 + np.max(np.abs([chart.gamma.jet(s)[1] for s in s_grid]))
        details["max_curvature_triple"] = float(np.max(np.abs(tr[:, 0])))
        details["max_origin_triple"] = float(np.max(np.abs(tr[:, 1])))
        plane = np.max(np.abs(tr)) <= 1e-8 * scale**3
        report.stationary = bool(plane)
        report.branch = "cy: vector plane" if plane else "cy: not a vector plane"
        if plane:
            report.alpha, report.alpha_indeterminate = None, True
        return report

    if not fit.stationary:
        report.branch = "not stationary"
        return report
    if fit.indeterminate:
        report.branch = "vector plane"
        return report
    if abs(fit.alpha) <= 1e-6:
        # alpha = 0 is the maximal (H = 0) problem, excluded from the stationary theory
        report.stationary = False
        report.branch = "maximal (alpha = 0)"
        return report

    if cls is RulingClass.NONLIGHTLIKE_W_LIGHTLIKE_WP:
        # only vector planes (indeterminate alpha) survive this case
        report.stationary = False
        report.branch = "thnli2: rejected (non-planar)"
        return report

    if cls is RulingClass.NONLIGHTLIKE_W_NONLIGHTLIKE_WP:
        norm = RuledNormalization(chart)
        smp = norm.sample(s_grid)
        details["max_kappa_g"] = float(np.max(np.abs(smp["kappa_g"])))
        details["max_F"] = float(np.max(np.abs(smp["F"])))
        details["mu"] = norm.mu
        details["delta"] = norm.delta
        if abs(abs(fit.alpha) - 1) > 1e-4:
            # the listed non-lightlike families all have |alpha| = 1
            report.branch = "half-branch" if abs(abs(fit.alpha) - 0.5) <= 1e-4 else "thnli: unexpected alpha"
        elif norm.mu == 1:
            report.branch = "thnli-1a" if details["max_F"] <= 1e-6 else "thnli-1b"
        else:
            report.branch = "thnli-2"
        return report

    # lightlike ruling
    a = fit.alpha
    if abs(a - 2) <= 1e-4 * 2:
        report.branch = "thli-1"
    elif abs(abs(a) - 4) <= 1e-4 * 4:
        g_pts = np.array([chart.gamma(s) for s in s_grid])
        null = np.max(np.abs(mink_dot(g_pts, g_pts))) <= 1e-8 * (1 + np.max(np.sum(g_pts**2, axis=1)))
        line = np.linalg.matrix_rank(g_pts, tol=1e-8 * (1 + np.max(np.abs(g_pts)))) <= 1
        if null and line:
            report.branch = "thli-2a"
        else:
            report.branch = "thli-2b"
            details["max_identity"] = float(max(abs(thli_identity(chart, s)) for s in s_grid))
    else:
        report.branch = "thli: unexpected alpha"
    return report


# ---------------------------------------------------------------- sampled input


CSV_HEADER = ["s", "g1", "g2", "g3", "w1", "w2", "w3"]


def read_samples(path) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Parse ``s,g1,g2,g3,w1,w2,w3`` records; s strictly increasing, >= 8 rows."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != CSV_HEADER:
            raise ValueError(f"expected header {','.join(CSV_HEADER)}")
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row or not "".join(row).strip():
                continue
            if len(row) != 7:
                raise ValueError(f"line {lineno}: expected 7 fields, got {len(row)}")
            try:
                rows.append([float(x) for x in row])
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
    data = np.array(rows)
    if data.shape[0] < 8:
        raise ValueError("need at least 8 samples")
    if np.any(np.diff(data[:, 0]) <= 0):
        raise ValueError("s must be strictly increasing")
    return data[:, 0], data[:, 1:4], data[:, 4:7]


def write_samples(path, s, gamma_pts, w_pts) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        wr = csv.writer(fh, lineterminator="\n")
        wr.writerow(CSV_HEADER)
        for row in np.column_stack([s, gamma_pts, w_pts]):
            wr.writerow([repr(float(x)) for x in row])


def chart_from_samples(s, gamma_pts, w_pts, t_range, trim: int = 2) -> RuledChart:
    """Spline-backed ruled chart; ``trim`` end samples are dropped from the s-domain."""
    gc = SplineCurve(s, gamma_pts)
    wc = SplineCurve(s, w_pts)
    return RuledChart(gc, wc, (s[trim], s[-1 - trim]), t_range)
