"""Closed-form stationary families (and a few negative controls) with their claims.

Every constructor returns a :class:`Family`: a chart with exact jets plus a
:class:`FamilySpec` carrying the claimed alpha, cone region and causal type.
Families are addressable by string ids such as ``"pr1-3b?n=2&r=1"`` or
``"thnli-1b?c1=1&c2=0"`` through :func:`resolve`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from urllib.parse import parse_qsl

import numpy as np
import sympy as sp

from .errors import GeometryError, OnConeError
from .jets import SymbolicCurve
from .minkowski import CausalClass, ConeRegion, mink_dot
from .ruled import RuledChart, region_normal_signs
from .surface import CONE_BAND, Chart, SymbolicChart

S, T = sp.symbols("s t", real=True)


class UnknownFamily(KeyError):
    pass


@dataclass
class FamilySpec:
    id: str
    params: dict
    claimed_alpha: float | None  # None means every alpha works
    claimed_region: ConeRegion | None  # None when the family meets both regions
    claimed_causal: CausalClass
    domain: list
    punctures: dict = field(default_factory=dict)
    expect_stationary: bool = True
    note: str = ""

    @property
    def n(self) -> int:
        return len(self.domain)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "params": self.params,
            "claimed_alpha": self.claimed_alpha,
            "claimed_region": None if self.claimed_region is None else self.claimed_region.value,
            "claimed_causal": self.claimed_causal.value,
            "domain": [list(map(float, d)) for d in self.domain],
            "punctures": self.punctures,
            "expect_stationary": self.expect_stationary,
            "note": self.note,
        }


@dataclass
class Family:
    chart: Chart
    spec: FamilySpec

    def __iter__(self):
        return iter((self.chart, self.spec))


# ---------------------------------------------------------------- helpers


def boost(dim: int, rapidity: float) -> sp.Matrix:
    """Lorentz boost mixing x_1 and the time axis."""
    B = sp.eye(dim)
    if rapidity:
        b = sp.nsimplify(rapidity)
        B[0, 0] = B[dim - 1, dim - 1] = sp.cosh(b)
        B[0, dim - 1] = B[dim - 1, 0] = sp.sinh(b)
    return B


def _angles(n: int):
    """Symbols and a unit vector on S^{n-1} whose chart is regular near +-e1."""
    if n == 2:
        a = sp.Symbol("a", real=True)
        return [a], [sp.cos(a), sp.sin(a)]
    if n == 3:
        a, b = sp.symbols("a b", real=True)
        return [a, b], [sp.cos(a) * sp.cos(b), sp.sin(a) * sp.cos(b), sp.sin(b)]
    raise ValueError("quadric charts are provided for n = 2 and n = 3")


def _angle_domain(n: int, center: float = np.pi / 2, half: float = np.pi - 0.05):
    dom = [(center - half, center + half)]
    if n == 3:
        dom.append((-1.2, 1.2))
    return dom


def _grid_shape(n: int):
    return (64, 16) if n == 2 else (12, 12, 12)


def _check_off_cone(chart: Chart, samples: int = 9) -> None:
    shape = (samples,) * chart.n
    for u in chart.grid(shape):
        X = chart.position(*u)
        if abs(mink_dot(X, X)) < CONE_BAND * (1 + X @ X):
            raise OnConeError(f"declared domain meets the cone band at {tuple(map(float, u))}")


def _ruled(gamma, w, s_range, t_range) -> RuledChart:
    return RuledChart(SymbolicCurve(gamma, S), SymbolicCurve(w, S), s_range, t_range)


def _positive(name, v):
    if not v > 0:
        raise ValueError(f"{name} must be positive, got {v}")


# ---------------------------------------------------------------- planes


def make_vector_plane(basis, domain=((0.5, 1.5), (-0.3, 0.3)), fid: str = "plane") -> Family:
    """Vector plane spanned by two vectors of L^3; every alpha is admissible."""
    b1, b2 = (np.asarray(b, dtype=float) for b in basis)
    g = np.array([[mink_dot(b1, b1), mink_dot(b1, b2)], [mink_dot(b2, b1), mink_dot(b2, b2)]])
    det = np.linalg.det(g)
    if abs(det) <= 1e-12 * max(1.0, np.sum(g**2)):
        raise GeometryError("degenerate (lightlike) plane")
    exprs = [sp.nsimplify(b1[i]) * S + sp.nsimplify(b2[i]) * T for i in range(3)]
    chart = SymbolicChart(exprs, [S, T], domain, (64, 16))
    _check_off_cone(chart)
    causal = CausalClass.SPACELIKE if det > 0 else CausalClass.TIMELIKE
    spec = FamilySpec(fid, {"basis": [b1.tolist(), b2.tolist()]}, None, None, causal, list(domain))
    X = chart.position(*(0.5 * (lo + hi) for lo, hi in domain))
    spec.claimed_region = ConeRegion.CPLUS if mink_dot(X, X) < 0 else ConeRegion.CMINUS
    return Family(chart, spec)


def make_horizontal_plane(c: float, part: str = "minus") -> Family:
    """Maximal plane x_3 = c split into its C^+ disk and its C^- exterior."""
    _positive("c", c)
    if part == "plus":
        h = 0.6 * c
        dom = [(-h, h), (-h, h)]
        chart = SymbolicChart([S, T, sp.nsimplify(c)], [S, T], dom, (32, 32))
        region = ConeRegion.CPLUS
    elif part == "minus":
        dom = [(1.3 * c, 4.0 * c), (0.0, 2 * np.pi)]
        chart = SymbolicChart([S * sp.cos(T), S * sp.sin(T), sp.nsimplify(c)], [S, T], dom, (32, 32))
        region = ConeRegion.CMINUS
    else:
        raise ValueError("part must be 'plus' or 'minus'")
    spec = FamilySpec(f"plane-x3?c={c:g}&part={part}", {"c": c, "part": part}, 0.0, region,
                      CausalClass.SPACELIKE, dom, note="maximal: H = 0")
    return Family(chart, spec)


def make_vertical_plane(c: float, part: str = "minus") -> Family:
    """Timelike plane x_1 = c; ``plus`` is the future C^+ piece |x_3| > sqrt(c^2 + x_2^2)."""
    _positive("c", c)
    if part == "minus":
        dom = [(-2 * c, 2 * c), (-0.6 * c, 0.6 * c)]
        chart = SymbolicChart([sp.nsimplify(c), S, T], [S, T], dom, (32, 32))
        region = ConeRegion.CMINUS
    elif part == "plus":
        dom = [(-c, c), (2.0 * c, 3.0 * c)]
        chart = SymbolicChart([sp.nsimplify(c), S, T], [S, T], dom, (32, 32))
        region = ConeRegion.CPLUS
    else:
        raise ValueError("part must be 'plus' or 'minus'")
    spec = FamilySpec(f"plane-x1?c={c:g}&part={part}", {"c": c, "part": part}, 0.0, region,
                      CausalClass.TIMELIKE, dom, note="H = 0")
    _check_off_cone(chart)
    return Family(chart, spec)


# ---------------------------------------------------------------- quadrics


def make_hyperbolic(n: int = 2, r: float = 1.0, shifted: bool = False, component: str = "upper",
                    rapidity: float = 0.0) -> Family:
    """Hyperbolic hyperplane <p - p0, p - p0> = -r^2 in hyperbolic-polar coordinates.

    Centered (p0 = 0): the upper sheet, alpha = n.  Shifted (p0 = r e_{n+1},
    boosted by ``rapidity``): the far sheet lies in C^+ with alpha = 2n and
    the near sheet passes through 0, lies in C^- and has alpha = -2n.
    """
    _positive("r", r)
    rho = sp.Symbol("rho", real=True)
    ang, theta = _angles(n)
    rr = sp.nsimplify(r)
    sign = 1 if component == "upper" else -1
    if component not in ("upper", "lower"):
        raise ValueError("component must be 'upper' or 'lower'")
    local = [rr * sp.sinh(rho) * th for th in theta] + [sign * rr * sp.cosh(rho)]
    p0 = [0] * n + [rr if shifted else 0]
    B = boost(n + 1, rapidity)
    exprs = list(B * sp.Matrix([a + b for a, b in zip(local, p0)]))
    dom = [(0.15, 1.5)] + _angle_domain(n)
    chart = SymbolicChart(exprs, [rho] + ang, dom, _grid_shape(n))
    punct = {"rho_min": 0.15}
    if not shifted:
        alpha = float(n)
        region = ConeRegion.CPLUS
        fid = f"pr1-2a?n={n}&r={r:g}"
    elif sign > 0:
        alpha, region, fid = 2.0 * n, ConeRegion.CPLUS, f"pr1-2a?n={n}&r={r:g}&shifted=1"
    else:
        alpha, region, fid = -2.0 * n, ConeRegion.CMINUS, f"pr1-2b?n={n}&r={r:g}"
        punct["origin"] = "rho = 0 maps to the origin"
    if rapidity:
        fid += f"&rapidity={rapidity:g}"
    spec = FamilySpec(fid, {"n": n, "r": r, "shifted": shifted, "component": component, "rapidity": rapidity},
                      alpha, region, CausalClass.SPACELIKE, dom, punct)
    _check_off_cone(chart)
    return Family(chart, spec)


def make_pseudosphere(n: int = 2, r: float = 1.0, shifted: bool = False, part: str = "minus",
                      rapidity: float = 0.0) -> Family:
    """Pseudosphere <p - p0, p - p0> = r^2.

    Centered: alpha = n.  Shifted by p0 = r e_1: the part with x_1 > 0 lies in
    C^- (alpha = 2n); the part with x_1 < 0 lies in C^+ (alpha = -2n) and
    meets the cone along x_1 = 0.
    """
    _positive("r", r)
    y = sp.Symbol("y", real=True)
    ang, theta = _angles(n)
    rr = sp.nsimplify(r)
    local = [rr * sp.cosh(y) * th for th in theta] + [rr * sp.sinh(y)]
    if not shifted:
        dom = [(-1.2, 1.2)] + _angle_domain(n)
        alpha, region, fid, punct = float(n), ConeRegion.CMINUS, f"pr1-3a?n={n}&r={r:g}", {}
        exprs = local
    else:
        p0 = [rr] + [0] * n
        exprs = [a + b for a, b in zip(local, p0)]
        if part == "minus":
            dom = [(-1.0, 1.0)] + _angle_domain(n, 0.0, 1.2)
            alpha, region, fid = 2.0 * n, ConeRegion.CMINUS, f"pr1-3a?n={n}&r={r:g}&shifted=1"
            punct = {}
        elif part == "plus":
            dom = [(0.8, 2.0)] + _angle_domain(n, np.pi, 0.4)
            if n == 3:
                dom[2] = (-0.4, 0.4)
            alpha, region, fid = -2.0 * n, ConeRegion.CPLUS, f"pr1-3b?n={n}&r={r:g}"
            punct = {"y_min": 0.8, "cone": "x_1 = 0 is excluded"}
        else:
            raise ValueError("part must be 'plus' or 'minus'")
    B = boost(n + 1, rapidity)
    exprs = list(B * sp.Matrix(exprs))
    if rapidity:
        fid += f"&rapidity={rapidity:g}"
    chart = SymbolicChart(exprs, [y] + ang, dom, _grid_shape(n))
    spec = FamilySpec(fid, {"n": n, "r": r, "shifted": shifted, "part": part, "rapidity": rapidity},
                      alpha, region, CausalClass.TIMELIKE, dom, punct)
    _check_off_cone(chart)
    return Family(chart, spec)


# ---------------------------------------------------------------- ruled families


def _unit_pair(c1, c2, hyperbolic: bool = False):
    """Check c1^2 + c2^2 = 1, or c1^2 - c2^2 = 1 when ``hyperbolic``."""
    q = c1 * c1 - c2 * c2 if hyperbolic else c1 * c1 + c2 * c2
    if abs(q - 1) > 1e-12:
        form = "c1^2 - c2^2" if hyperbolic else "c1^2 + c2^2"
        raise ValueError(f"need {form} = 1, got {q}")
    return sp.nsimplify(c1), sp.nsimplify(c2)


def _measured_claims(chart: RuledChart):
    """Region, causal type and eps_region * eps_normal at the centre of the chart."""
    s = 0.5 * sum(chart.s_range)
    t = 0.5 * sum(chart.t_range)
    er, en = region_normal_signs(chart, s, t)
    region = ConeRegion.CPLUS if er > 0 else ConeRegion.CMINUS
    causal = CausalClass.SPACELIKE if en < 0 else CausalClass.TIMELIKE
    return region, causal, er * en


def _window_1b(c1: float, c2: float, t_max: float):
    """An s-window of length one on which |gamma_3|^2 > 1 + t_max^2 with margin."""
    for lo in (1.5, -2.5, 2.5, -3.5, 3.5, -4.5):
        s = np.linspace(lo, lo + 1.0, 33)
        g3 = c1 * np.cosh(s) + c2 * np.sinh(s)
        if np.min(g3 * g3) > 1.5 * (1 + t_max**2):
            return (lo, lo + 1.0)
    raise ValueError("no admissible s-window for these constants")


def make_thnli(branch: str, sign: int = 1, c1: float = 1.0, c2: float = 0.0, s_range=None, t_range=None) -> Family:
    """Non-lightlike ruling families; the claimed alpha is eps_region * eps_normal measured on the chart."""
    if branch == "1a":
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        g, w = [0, 0, sp.exp(sign * S)], [sp.cos(S), sp.sin(S), 0]
        sr, tr = (0.0, 1.0), (-0.3, 0.3)
        params = {"sign": sign}
    elif branch == "1b":
        # b = c1 cosh s + c2 sinh s must satisfy b^2 - b'^2 = 1
        a, b = _unit_pair(c1, c2, hyperbolic=True)
        g, w = [-sp.sin(S), sp.cos(S), a * sp.cosh(S) + b * sp.sinh(S)], [sp.cos(S), sp.sin(S), 0]
        tr = t_range or (-0.8, 0.8)
        sr = s_range or _window_1b(c1, c2, max(map(abs, tr)))
        params = {"c1": c1, "c2": c2}
    elif branch == "2":
        a, b = _unit_pair(c1, c2)
        g, w = [sp.sinh(S), a * sp.cos(S) + b * sp.sin(S), sp.cosh(S)], [sp.cosh(S), 0, sp.sinh(S)]
        # <X,X> = t^2 - sin^2(phi0 - s) with (c1, c2) = (cos phi0, sin phi0)
        sc = float(np.arctan2(c2, c1)) - np.pi / 2
        sr, tr = (sc - 0.5, sc + 0.5), (-0.4, 0.4)
        params = {"c1": c1, "c2": c2}
    else:
        raise ValueError("branch must be 1a, 1b or 2")
    chart = _ruled(g, w, s_range or sr, t_range or tr)
    _check_off_cone(chart)
    region, causal, sigma = _measured_claims(chart)
    fid = f"thnli-{branch}?" + "&".join(f"{k}={v:g}" for k, v in params.items())
    spec = FamilySpec(fid, params, float(sigma), region, causal, list(chart.domain),
                      note="alpha = eps_region * eps_normal")
    return Family(chart, spec)


def make_half_branch(c1: float = 1.0, c2: float = 0.0, s_range=None, t_range=None) -> Family:
    """Unit spacelike ruling with k = 1/2 in the harmonic branch: a = -b, b'' = -b/2.

    The obstruction of that branch carries the factor (2k - 1)/(k - 1), so k = 1/2 escapes it
    and the chart is stationary with alpha = -eps_region * eps_normal / 2.
    """
    r = 1 / sp.sqrt(2)
    b = c1 * sp.cos(r * S) + c2 * sp.sin(r * S)
    w = sp.Matrix([sp.cos(S), sp.sin(S), 0])
    g = sp.diff(b, S) * w - b * w.diff(S) + b * sp.Matrix([0, 0, -1])
    chart = _ruled(list(g), list(w), s_range or (1.0, 1.6), t_range or (-0.2, 0.2))
    _check_off_cone(chart)
    region, causal, sigma = _measured_claims(chart)
    params = {"c1": c1, "c2": c2}
    fid = "half-branch?" + "&".join(f"{k}={v:g}" for k, v in params.items())
    spec = FamilySpec(fid, params, -0.5 * float(sigma), region, causal, list(chart.domain),
                      note="outside the stated list; alpha = -eps_region * eps_normal / 2")
    return Family(chart, spec)


def example2_bound(s0: float) -> float:
    u0 = np.tan(s0 / 2)
    return (1 - u0 * u0) / (2 * u0)


def make_thli(branch: str = "1", s0: float = np.pi / 4, side: str = "minus", s_range=None, t_range=None) -> Family:
    """Lightlike ruling families: gamma = w' (alpha = 2) or the explicit (2b) example."""
    if branch == "1":
        w = [sp.sinh(S), 1, sp.cosh(S)]
        g = [sp.diff(e, S) for e in w]
        chart = _ruled(g, w, s_range or (-1.0, 1.0), t_range or (-2.0, 2.0))
        spec = FamilySpec("thli-1", {}, 2.0, ConeRegion.CMINUS, CausalClass.TIMELIKE, list(chart.domain),
                          note="<X,X> = 1")
    elif branch == "2b":
        if not 0 < s0 <= np.pi / 2 - 0.3:
            raise ValueError("need 0 < s0 <= pi/2 - 0.3")
        g = [sp.sin(S), -sp.cos(S), sp.tan(S / 2)]
        w = [sp.cos(S), sp.sin(S), 1]
        sr = s_range or (s0, np.pi / 2 - 0.2)
        bound = example2_bound(s0)
        if side == "minus":
            tr, alpha, region = t_range or (-2.0, 0.0), 4.0, ConeRegion.CMINUS
            if tr[1] > 0:
                raise OnConeError("the C^- piece needs t <= 0")
        elif side == "plus":
            tr, alpha, region = t_range or (bound + 0.5, bound + 2.5), -4.0, ConeRegion.CPLUS
            if tr[0] <= bound:
                raise OnConeError(f"the C^+ piece needs t > {bound:g}")
        else:
            raise ValueError("side must be 'minus' or 'plus'")
        chart = _ruled(g, w, sr, tr)
        spec = FamilySpec(f"thli-2b?s0={s0:g}&side={side}", {"s0": s0, "side": side}, alpha, region,
                          CausalClass.TIMELIKE, list(chart.domain), {"t_bound": bound})
    else:
        raise ValueError("branch must be 1 or 2b")
    _check_off_cone(chart)
    return Family(chart, spec)


def make_controls(name: str) -> Family:
    """Negative controls: charts that must not be reported stationary."""
    if name == "cylinder":
        chart = _ruled([sp.cos(S), sp.sin(S), 0], [0, 0, 1], (0.0, 2.0), (-0.4, 0.4))
        causal = CausalClass.TIMELIKE
    elif name == "helicoid":
        # tilted ruling: the exact helicoid is maximal (alpha = 0)
        chart = _ruled([0, 0, S], [sp.cos(S), sp.sin(S), sp.Rational(1, 2)], (1.0, 2.0), (-0.5, 0.5))
        causal = CausalClass.TIMELIKE
    elif name == "thnli2":
        chart = _ruled([S**2 / 2, S, 0], [1, -S, -S], (0.5, 1.5), (0.1, 0.5))
        causal = CausalClass.SPACELIKE
    else:
        raise ValueError(f"unknown control {name!r}")
    spec = FamilySpec(f"control-{name}", {}, None, None, causal, list(chart.domain), expect_stationary=False)
    _check_off_cone(chart)
    return Family(chart, spec)


# ---------------------------------------------------------------- graphs


@dataclass
class GraphFamily:
    """x_{n+1} = u(q) over a box in R^n with closed-form derivatives."""

    kind: str
    n: int
    alpha: float
    u: object
    Du: object
    D2u: object
    box: list

    def jet(self, q):
        q = np.asarray(q, dtype=float)
        return float(self.u(q)), np.asarray(self.Du(q), float), np.asarray(self.D2u(q), float)

    def samples(self, k: int = 7):
        axes = [np.linspace(lo, hi, k) for lo, hi in self.box]
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=1)


def make_graph_family(kind: str, n: int = 2, r: float = 1.0, c: float = 1.0):
    """Graph data for the hyperbolic sheet and the maximal plane; the vertical plane is a chart."""
    if kind == "hyperbolic_upper":
        _positive("r", r)

        def u(q):
            return np.sqrt(q @ q + r * r)

        def Du(q):
            return q / u(q)

        def D2u(q):
            v = u(q)
            return np.eye(len(q)) / v - np.outer(q, q) / v**3

        return GraphFamily(kind, n, float(n), u, Du, D2u, [(-2.0, 2.0)] * n)
    if kind == "maximal_horizontal_plane":
        _positive("c", c)
        return GraphFamily(kind, n, 0.0, lambda q: c, lambda q: np.zeros(n), lambda q: np.zeros((n, n)),
                           [(-0.5 * c, 0.5 * c)] * n)
    if kind == "timelike_vertical_plane":
        return make_vertical_plane(c)
    raise ValueError(f"unknown graph family {kind!r}")


# ---------------------------------------------------------------- registry


def _flag(v) -> bool:
    return str(v).lower() in ("1", "true", "yes")


_BUILDERS = {
    "plane-e1e2": lambda p: make_vector_plane([(1, 0, 0), (0, 1, 0)], ((0.2, 1.0), (-1.0, 1.0)), "plane-e1e2"),
    "plane-e1e3": lambda p: make_vector_plane([(1, 0, 0), (0, 0, 1)], ((0.5, 1.5), (-0.3, 0.3)), "plane-e1e3"),
    "plane-x3": lambda p: make_horizontal_plane(float(p.get("c", 0.5)), p.get("part", "minus")),
    "plane-x1": lambda p: make_vertical_plane(float(p.get("c", 1.0)), p.get("part", "minus")),
    "pr1-2a": lambda p: make_hyperbolic(int(p.get("n", 2)), float(p.get("r", 1)), _flag(p.get("shifted", 0)),
                                        "upper", float(p.get("rapidity", 0))),
    "pr1-2b": lambda p: make_hyperbolic(int(p.get("n", 2)), float(p.get("r", 1)), True, "lower",
                                        float(p.get("rapidity", 0))),
    "pr1-3a": lambda p: make_pseudosphere(int(p.get("n", 2)), float(p.get("r", 1)), _flag(p.get("shifted", 0)),
                                          "minus", float(p.get("rapidity", 0))),
    "pr1-3b": lambda p: make_pseudosphere(int(p.get("n", 2)), float(p.get("r", 1)), True, "plus",
                                          float(p.get("rapidity", 0))),
    "thnli-1a": lambda p: make_thnli("1a", sign=int(float(p.get("sign", 1)))),
    "thnli-1b": lambda p: make_thnli("1b", c1=float(p.get("c1", 1)), c2=float(p.get("c2", 0))),
    "thnli-2": lambda p: make_thnli("2", c1=float(p.get("c1", 0)), c2=float(p.get("c2", 1))),
    "thli-1": lambda p: make_thli("1"),
    "thli-2b": lambda p: make_thli("2b", float(p.get("s0", np.pi / 4)), p.get("side", "minus")),
    "half-branch": lambda p: make_half_branch(float(p.get("c1", 1)), float(p.get("c2", 0))),
    "control-cylinder": lambda p: make_controls("cylinder"),
    "control-helicoid": lambda p: make_controls("helicoid"),
    "control-thnli2": lambda p: make_controls("thnli2"),
}

CATALOG_IDS = [
    "plane-e1e2", "plane-e1e3",
    "pr1-2a?n=2&r=1", "pr1-2a?n=3&r=1", "pr1-3a?n=2&r=1", "pr1-3a?n=3&r=1",
    "pr1-2a?n=2&r=1&shifted=1", "pr1-2b?n=2&r=1", "pr1-3a?n=2&r=1&shifted=1", "pr1-3b?n=2&r=1",
    "thnli-1a?sign=1", "thnli-1a?sign=-1", "thnli-1b?c1=1&c2=0", "thnli-1b?c1=1.25&c2=0.75",
    "thnli-2?c1=0&c2=1", "thnli-2?c1=1&c2=0",
    "thli-1", "thli-2b?side=minus", "thli-2b?side=plus", "half-branch?c1=1&c2=0",
    "control-cylinder", "control-helicoid", "control-thnli2",
]


def parse_id(fid: str) -> tuple[str, dict]:
    base, _, query = fid.partition("?")
    return base.strip(), dict(parse_qsl(query, keep_blank_values=False, strict_parsing=bool(query)))


def resolve(fid: str, **overrides) -> Family:
    """Build the family named by ``fid``; keyword overrides win over the query string."""
    base, params = parse_id(fid)
    if base not in _BUILDERS:
        raise UnknownFamily(f"unknown family {base!r}; known: {', '.join(sorted(_BUILDERS))}")
    params.update({k: v for k, v in overrides.items() if v is not None})
    return _BUILDERS[base](params)


def family_names() -> list[str]:
    return sorted(_BUILDERS)
