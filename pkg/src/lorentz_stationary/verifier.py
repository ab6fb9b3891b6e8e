"""Grid verification of stationarity claims, inversion transport and the proof-case checks."""
from __future__ import annotations

import functools
from dataclasses import asdict, dataclass, field

import numpy as np
import sympy as sp

from . import __version__
from .catalog import CATALOG_IDS, Family, resolve
from .errors import (
    DegenerateMetric,
    GeometryError,
    IndeterminateAlpha,
    OnConeError,
)
from .minkowski import CausalClass, ConeRegion, cone_region, far_from_cone, mink_dot
from .ruled import RuledChart, RulingClass, classify_ruled, cylinder_triples, ruling_class
from .surface import (
    CONE_BAND,
    Chart,
    HyperJet,
    ChartJet2,
    as_hyper,
    fit_alpha,
    shape_matrix,
    stationarity_residual,
)

DEFAULT_SEED = 20240531
EXCLUSION_LIMIT = 0.2


# ---------------------------------------------------------------- residual scans


@dataclass
class ResidualReport:
    family: str
    alpha: float
    grid: list
    n_points: int
    max_residual: float
    mean_residual: float
    fitted_alpha_mean: float | None
    fitted_alpha_std: float | None
    alpha_indeterminate: int
    exclusions: list
    tol: float
    verdict: str
    seed: int | None = None
    version: str = __version__
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return asdict(self)


def residual_scan(chart: Chart, alpha: float, shape=None, tol: float = 1e-8, family: str = "") -> ResidualReport:
    """Evaluate the stationarity residual on a grid; exclusions are counted, not raised."""
    pts = chart.grid(shape)
    shape = list(shape or chart.default_shape or (16,) * chart.n)
    res, fits = [], []
    excl = {"cone_band": 0, "degenerate_metric": 0}
    indet = 0
    for u in pts:
        try:
            jet = chart.jet(*u)
            res.append(abs(stationarity_residual(jet, alpha)))
        except OnConeError:
            excl["cone_band"] += 1
            continue
        except DegenerateMetric:
            excl["degenerate_metric"] += 1
            continue
        try:
            fits.append(fit_alpha(jet))
        except IndeterminateAlpha:
            indet += 1
    n_ex = sum(excl.values())
    res = np.array(res) if res else np.array([np.inf])
    fits = np.array(fits)
    notes = []
    if indet == len(pts) - n_ex:
        notes.append("IndeterminateAlpha: <N,X> = 0 on the whole grid, every alpha is admissible")
    ok = bool(np.max(res) <= tol and n_ex < EXCLUSION_LIMIT * len(pts))
    return ResidualReport(
        family=family,
        alpha=float(alpha),
        grid=shape,
        n_points=len(pts),
        max_residual=float(np.max(res)),
        mean_residual=float(np.mean(res)),
        fitted_alpha_mean=float(np.mean(fits)) if fits.size else None,
        fitted_alpha_std=float(np.std(fits)) if fits.size else None,
        alpha_indeterminate=indet,
        exclusions=[{"reason": k, "count": v} for k, v in excl.items() if v],
        tol=tol,
        verdict="pass" if ok else "fail",
        notes=notes,
    )


def scan_family(fid: str, alpha: float | None = None, shape=None, tol: float = 1e-8) -> ResidualReport:
    fam = resolve(fid)
    a = fam.spec.claimed_alpha if alpha is None else alpha
    if a is None:
        a = 0.0
    return residual_scan(fam.chart, a, shape, tol, fam.spec.id)


# ---------------------------------------------------------------- inversion


def inversion_d2(p, v, w) -> np.ndarray:
    """Second derivative of p -> p/<p,p> applied to (v, w)."""
    q = mink_dot(p, p)
    pv, pw, vw = mink_dot(p, v), mink_dot(p, w), mink_dot(v, w)
    return (-2 * pw * v - 2 * pv * w - 2 * vw * p) / q**2 + 8 * pv * pw * p / q**3


def push_jet(jet, method: str = "exact", h: float = 1e-5, chart: Chart | None = None, u=None) -> HyperJet:
    """Jet of the inverted chart.

    ``exact`` chains the first and second derivatives of the inversion;
    ``fd`` differentiates the exact first-order pushforward numerically and
    needs the source chart and parameter point.
    """
    j = as_hyper(jet)
    X = j.X
    q = mink_dot(X, X)
    if abs(q) < CONE_BAND * (1 + X @ X):
        raise OnConeError("source point inside the cone band")

    def d1(p, v):
        qq = mink_dot(p, p)
        return v / qq - 2 * mink_dot(p, v) * p / qq**2

    Y = X / q
    dY = np.array([d1(X, v) for v in j.dX])
    n = j.n
    ddY = np.empty_like(j.ddX)
    if method == "exact":
        for a in range(n):
            for b in range(n):
                ddY[a, b] = d1(X, j.ddX[a, b]) + inversion_d2(X, j.dX[a], j.dX[b])
    elif method == "fd":
        if chart is None or u is None:
            raise ValueError("finite-difference pushforward needs the chart and parameter point")
        u = np.asarray(u, dtype=float)
        for b in range(n):
            e = np.zeros(n)
            e[b] = h
            jp, jm = as_hyper(chart.jet(*(u + e))), as_hyper(chart.jet(*(u - e)))
            for a in range(n):
                ddY[a, b] = (d1(jp.X, jp.dX[a]) - d1(jm.X, jm.dX[a])) / (2 * h)
        ddY = 0.5 * (ddY + ddY.transpose(1, 0, 2))
    else:
        raise ValueError(f"unknown method {method!r}")
    return HyperJet(Y, dY, ddY)


class ImageChart(Chart):
    """The image of a chart under the inversion, on the same parameter box."""

    def __init__(self, source: Chart, method: str = "exact", h: float = 1e-5):
        super().__init__(list(source.domain), tuple(source.default_shape))
        self.source = source
        self.method = method
        self.h = h

    def jet(self, *u):
        j = push_jet(self.source.jet(*u), self.method, self.h, self.source, u)
        return ChartJet2.from_hyper(j) if self.n == 2 else j


@dataclass
class ExpectedQuadric:
    """<x - center, x - center> = sign * r^2 (sign -1 hyperbolic, +1 pseudosphere)."""

    center: tuple
    r: float
    sign: int
    label: str = ""

    def distance(self, x) -> float:
        d = np.asarray(x, float) - np.asarray(self.center, float)
        f = mink_dot(d, d) - self.sign * self.r**2
        grad = 2 * d * np.r_[np.ones(len(d) - 1), -1.0]
        return abs(f) / max(np.linalg.norm(grad), 1e-300)


def plane_image(kind: str, c: float, n: int = 2) -> ExpectedQuadric:
    """Quadric containing the inverse image of x_{n+1} = c (``horizontal``) or x_1 = c (``vertical``)."""
    center = np.zeros(n + 1)
    if kind == "horizontal":
        center[-1] = -1 / (2 * c)
        return ExpectedQuadric(tuple(center), 1 / (2 * abs(c)), -1, f"H^{n}({tuple(center)}, {1 / (2 * abs(c)):g})")
    if kind == "vertical":
        center[0] = 1 / (2 * c)
        return ExpectedQuadric(tuple(center), 1 / (2 * abs(c)), 1, f"S^{n}_1({tuple(center)}, {1 / (2 * abs(c)):g})")
    raise ValueError(kind)


def _predictions(n: int, alpha: float | None, eps_region: int, eps_normal: int) -> dict:
    if alpha is None:
        return {"stated": None, "flipped": None, "causal": None}
    a_plus, a_minus = -(2 * n + alpha), 2 * n - alpha
    stated = a_plus if eps_region > 0 else a_minus
    flipped = a_minus if eps_region > 0 else a_plus
    causal = a_minus if eps_region * eps_normal < 0 else a_plus
    return {"stated": stated, "flipped": flipped, "causal": causal}


@dataclass
class TransportReport:
    source: str
    n: int
    n_points: int
    excluded: int
    source_alpha: float | None
    source_region: str
    source_causal: str
    image_regions: list
    fitted_alpha_image_mean: float | None
    fitted_alpha_image_std: float | None
    predicted: dict
    matches: dict
    hv_discrepancy_max: float
    hv_discrepancy_mean: float
    proof_relation_discrepancy_max: float
    remark_discrepancy_max: float
    signed_law_discrepancy_max: float
    max_displacement: float
    hausdorff: float | None
    expected_image: str | None
    flags: dict
    method: str
    version: str = __version__

    def to_dict(self) -> dict:
        return asdict(self)


def inversion_transport(chart: Chart, shape=None, source_alpha: float | None = None, source: str = "",
                        expected: ExpectedQuadric | None = None, method: str = "exact",
                        tol: float = 1e-6) -> TransportReport:
    """Push a chart through the inversion and compare the measured alpha with each transport rule.

    Besides the alpha tables, three claimed relations are measured pointwise
    against direct computation (signed differences, image minus claim):
    ``hv``     H_phi = <p,p>^2 H + 2 n h,
    ``proof``  H_phi = <p,p> H - 2 n h,
    ``remark`` S_phi = <p,p> S + 2 h I   (shape operators in parameter coordinates),
    with N_phi = N - 2 h p/<p,p> and h = <N,p>.  ``signed_law`` is
    S_phi = <p,p> S + 2 eps_normal h I, which direct computation satisfies on
    both causal types.
    """
    pts = chart.grid(shape)
    n = chart.n
    hv, pr, rm, rmc, afit, afit_src, disp, dist = [], [], [], [], [], [], [], []
    regions_img, regions_src, eps_n = set(), set(), set()
    excluded = 0
    for u in pts:
        try:
            J = as_hyper(chart.jet(*u))
            X = J.X
            q = mink_dot(X, X)
            if abs(q) < CONE_BAND * (1 + X @ X):
                raise OnConeError
            S, N, eps = shape_matrix(J)
            Yj = push_jet(J, method, chart=chart, u=u)
            Simg, Nimg, eps_img = shape_matrix(Yj)
        except (OnConeError, DegenerateMetric):
            excluded += 1
            continue
        h = mink_dot(N, X)
        H = float(np.trace(S))
        Npred = N - 2 * h * X / q
        sgn = np.sign(mink_dot(Nimg, Npred)) * eps
        Simg = sgn * Simg
        Himg = float(np.trace(Simg))
        Y = Yj.X
        qY = mink_dot(Y, Y)
        hY = mink_dot(Npred, Y)
        hv.append(Himg - (q * q * H + 2 * n * h))
        pr.append(Himg - (q * H - 2 * n * h))
        I = np.eye(n)
        rm.append(np.max(np.abs(Simg - (q * S + 2 * h * I))))
        rmc.append(np.max(np.abs(Simg - (q * S + 2 * eps * h * I))))
        if abs(hY) > 1e-9 * np.sqrt(1 + Y @ Y):
            afit.append(-Himg * abs(qY) / hY)
        if abs(h) > 1e-9 * np.sqrt(1 + X @ X):
            afit_src.append(-H * abs(q) / h)
        regions_img.add(cone_region(Y).value)
        regions_src.add(1 if q < 0 else -1)
        eps_n.add(eps)
        disp.append(np.linalg.norm(Y - X))
        if expected is not None:
            dist.append(expected.distance(Y))
    if not hv:
        raise OnConeError("every grid point was excluded")
    if len(regions_src) > 1 or len(eps_n) > 1:
        raise GeometryError("source chart meets both cone regions or changes causal type; split it first")
    er, en = regions_src.pop(), eps_n.pop()
    if source_alpha is None and afit_src:
        sa = float(np.mean(afit_src))
        source_alpha = sa if np.std(afit_src) <= 1e-6 * max(1.0, abs(sa)) else None
    preds = _predictions(n, source_alpha, er, en)
    a_mean = float(np.mean(afit)) if afit else None
    a_std = float(np.std(afit)) if afit else None
    matches = {k: (None if v is None or a_mean is None else bool(abs(a_mean - v) <= tol * max(1.0, abs(v))))
               for k, v in preds.items()}
    hv_max = float(np.max(np.abs(hv)))
    rm_max = float(np.max(rm))
    flags = {
        "hv_discrepancy": hv_max > tol,
        "remark_discrepancy": rm_max > tol,
        "proof_relation_discrepancy": float(np.max(np.abs(pr))) > tol,
        "stated_rule_mismatch": matches["stated"] is False,
    }
    return TransportReport(
        source=source,
        n=n,
        n_points=len(pts),
        excluded=excluded,
        source_alpha=source_alpha,
        source_region=ConeRegion.CPLUS.value if er > 0 else ConeRegion.CMINUS.value,
        source_causal=(CausalClass.SPACELIKE if en < 0 else CausalClass.TIMELIKE).value,
        image_regions=sorted(regions_img),
        fitted_alpha_image_mean=a_mean,
        fitted_alpha_image_std=a_std,
        predicted=preds,
        matches=matches,
        hv_discrepancy_max=hv_max,
        hv_discrepancy_mean=float(np.mean(hv)),
        proof_relation_discrepancy_max=float(np.max(np.abs(pr))),
        remark_discrepancy_max=rm_max,
        signed_law_discrepancy_max=float(np.max(rmc)),
        max_displacement=float(np.max(disp)),
        hausdorff=float(np.max(dist)) if dist else None,
        expected_image=expected.label if expected else None,
        flags=flags,
        method=method,
    )


def transport_family(fid: str, shape=None, method: str = "exact") -> TransportReport:
    fam = resolve(fid)
    expected = None
    base = fid.split("?")[0]
    if base in ("plane-x3", "plane-x1"):
        expected = plane_image("horizontal" if base == "plane-x3" else "vertical", fam.spec.params["c"], fam.chart.n)
    return inversion_transport(fam.chart, shape, fam.spec.claimed_alpha, fam.spec.id, expected, method)


# ---------------------------------------------------------------- ODE branch explorer


ODE_CASES = {
    "a": "mu = 1, k = 1",
    "b": "mu = 1, k > 0, k != 1",
    "c": "mu = 1, k < 0",
    "d": "mu = -1, k = 1",
    "e": "mu = -1, k > 0, k != 1",
    "f": "mu = -1, k < 0",
}


def ode_case(mu: int, k: float) -> str:
    if mu not in (1, -1):
        raise ValueError("mu must be +1 or -1")
    if k == 0:
        raise ValueError("k = alpha*beta = 0 is the excluded maximal case")
    if mu == 1:
        return "a" if k == 1 else ("b" if k > 0 else "c")
    return "d" if k == 1 else ("e" if k > 0 else "f")


@dataclass
class OdeBranchSpec:
    mu: int
    k: float
    c: tuple = (1.0, 0.0, 0.0, 0.0)
    printed: bool = False  # use the a(s) exactly as displayed (case f carries a sign slip)

    @property
    def case(self) -> str:
        return ode_case(self.mu, self.k)


_s = sp.Symbol("s", real=True)
_c = sp.symbols("c1:5", real=True)
_k = sp.Symbol("k", real=True)


def _closed_forms(case: str, printed: bool):
    """(b, a, basis, obstruction names) for one proof case, symbolic in s, c_i, k."""
    s, (c1, c2, c3, c4), k = _s, _c, _k
    if case == "a":
        b = c1 * sp.cos(s) + c2 * sp.sin(s)
        a = sp.Rational(1, 2) * ((-c1 + 2 * c3 + c2 * s) * sp.cos(s) + (-c1 * s + 2 * c4) * sp.sin(s))
        trig = [sp.cos(s) ** 2, sp.sin(s) * sp.cos(s), sp.sin(s) ** 2]
        basis = trig + [s * f for f in trig]
        names = ["s*cos(s)^2"]
    elif case in ("b", "f"):
        r = sp.sqrt(k) if case == "b" else sp.sqrt(-k)
        b = c1 * sp.cos(r * s) + c2 * sp.sin(r * s)
        if case == "b":
            a = k / (k - 1) * b + c3 * sp.cos(s) + c4 * sp.sin(s)
            extra = [sp.sin((r + 1) * s), sp.cos((r + 1) * s), sp.sin((r - 1) * s), sp.cos((r - 1) * s)]
        else:
            sign = 1 if printed else -1
            a = c3 * sp.exp(s) + c4 * sp.exp(-s) + sign * k / (k - 1) * b
            extra = [sp.exp(s) * sp.cos(r * s), sp.exp(s) * sp.sin(r * s),
                     sp.exp(-s) * sp.cos(r * s), sp.exp(-s) * sp.sin(r * s)]
        basis = [sp.sin(2 * r * s), sp.cos(2 * r * s), sp.Integer(1)] + extra
        names = ["sin(2*r*s)", "cos(2*r*s)"]
    elif case in ("c", "e"):
        r = sp.sqrt(-k) if case == "c" else sp.sqrt(k)
        b = c1 * sp.exp(r * s) + c2 * sp.exp(-r * s)
        if case == "c":
            a = k / (k - 1) * b + c3 * sp.cos(s) + c4 * sp.sin(s)
            extra = [sp.exp(r * s) * sp.cos(s), sp.exp(r * s) * sp.sin(s),
                     sp.exp(-r * s) * sp.cos(s), sp.exp(-r * s) * sp.sin(s)]
        else:
            a = c3 * sp.exp(s) + c4 * sp.exp(-s) - k / (k - 1) * b
            extra = [sp.exp((1 + r) * s), sp.exp((1 - r) * s), sp.exp((r - 1) * s), sp.exp(-(1 + r) * s)]
        basis = [sp.exp(2 * r * s), sp.exp(-2 * r * s), sp.Integer(1)] + extra
        names = ["exp(2*r*s)", "exp(-2*r*s)"]
    elif case == "d":
        b = c1 * sp.exp(s) + c2 * sp.exp(-s)
        a = c3 * sp.exp(s) + c4 * sp.exp(-s) - c1 / 2 * s * sp.exp(s) + c2 / 2 * s * sp.exp(-s)
        basis = [sp.exp(2 * s), s * sp.exp(2 * s), sp.Integer(1), s, sp.exp(-2 * s), s * sp.exp(-2 * s)]
        names = ["s*exp(2*s)", "s*exp(-2*s)"]
    else:
        raise ValueError(case)
    return b, a, basis, names


@functools.lru_cache(maxsize=None)
def _compiled(case: str, mu: int, printed: bool):
    b, a, basis, names = _closed_forms(case, printed)
    s, k = _s, _k
    ode1 = sp.diff(b, s, 2) + k * mu * b
    amub = sp.diff(a, s, 2) + mu * a - mu * sp.diff(b, s, 2)
    ab = 2 * sp.diff(a, s) * b + b * sp.diff(b, s) - a * sp.diff(b, s)
    args = (s, *_c, k)
    f = sp.lambdify(args, [ode1, amub, ab], "numpy")
    fb = [sp.lambdify((s, k), e, "numpy") for e in basis]
    return f, fb, [str(e) for e in basis], names


DEFAULT_S_GRIDS = {
    "a": (0.0, 4 * np.pi), "b": (0.0, 4 * np.pi), "c": (-2.0, 2.0),
    "d": (-1.5, 1.5), "e": (-1.2, 1.2), "f": (-1.5, 1.5),
}


@dataclass
class BranchReport:
    case: str
    description: str
    mu: int
    k: float
    c: list
    printed: bool
    ode1_sup: float
    amub_sup: float
    ab_sup: float
    coefficients: dict
    obstruction: dict
    projection_error: float
    obstruction_nonzero: bool
    verdict: str

    def to_dict(self) -> dict:
        return asdict(self)


def ode_branch_explore(spec: OdeBranchSpec, s_grid=None, samples: int = 401) -> BranchReport:
    """Evaluate the closed-form (b, a) of one proof case and project the (ab) residual on its basis."""
    case = spec.case
    f, fb, bnames, names = _compiled(case, spec.mu, spec.printed)
    if s_grid is None:
        s_grid = np.linspace(*DEFAULT_S_GRIDS[case], samples)
    s_grid = np.asarray(s_grid, dtype=float)
    c = [float(x) for x in spec.c]
    if len(c) != 4:
        raise ValueError("need four constants")
    k = float(spec.k)

    def ev(e):
        return np.broadcast_to(np.asarray(e, float), s_grid.shape)

    ode1, amub, ab = (ev(e) for e in f(s_grid, *c, k))
    B = np.column_stack([ev(g(s_grid, k)) for g in fb])
    col = np.max(np.abs(B), axis=0)
    coef, *_ = np.linalg.lstsq(B / col, ab, rcond=None)
    coef = coef / col
    proj_err = float(np.max(np.abs(B @ coef - ab))) if ab.size else 0.0
    coeffs = {n: float(v) for n, v in zip(bnames, coef)}
    r = {"a": 1.0, "b": np.sqrt(abs(k)), "c": np.sqrt(abs(k)), "d": 1.0, "e": np.sqrt(abs(k)), "f": np.sqrt(abs(k))}[case]
    obstruction = {}
    idx = {"a": [3], "b": [0, 1], "c": [0, 1], "d": [1, 5], "e": [0, 1], "f": [0, 1]}[case]
    for name, i in zip(names, idx):
        obstruction[name.replace("r", f"{r:g}") if "r*" in name else name] = float(coef[i])
    scale = max(1.0, max(abs(x) for x in c))
    nonzero = max(abs(v) for v in obstruction.values()) > 1e-8 * scale**2
    if not any(c[:2]):
        verdict = "b = 0: plane branch (Q = 0)"
    elif nonzero:
        verdict = "contradiction: obstruction coefficient nonzero"
    elif np.max(np.abs(ab)) > 1e-8 * scale**2:
        verdict = "contradiction: (ab) residual outside the obstruction terms"
    else:
        verdict = "solution: all three equations hold"
    return BranchReport(
        case=case, description=ODE_CASES[case], mu=spec.mu, k=k, c=c, printed=spec.printed,
        ode1_sup=float(np.max(np.abs(ode1))), amub_sup=float(np.max(np.abs(amub))),
        ab_sup=float(np.max(np.abs(ab))), coefficients=coeffs, obstruction=obstruction,
        projection_error=proj_err, obstruction_nonzero=bool(nonzero), verdict=verdict,
    )


REPRESENTATIVE_K = {"a": 1.0, "b": 2.25, "c": -1.0, "d": 1.0, "e": 2.25, "f": -2.25}
CASE_MU = {"a": 1, "b": 1, "c": 1, "d": -1, "e": -1, "f": -1}


def random_branch_sweep(case: str, draws: int = 100, seed: int = DEFAULT_SEED) -> list[BranchReport]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(draws):
        c = rng.uniform(-1, 1, 4)
        while not np.any(c[:2]):
            c = rng.uniform(-1, 1, 4)
        out.append(ode_branch_explore(OdeBranchSpec(CASE_MU[case], REPRESENTATIVE_K[case], tuple(c))))
    return out


# ---------------------------------------------------------------- cylinders


@dataclass
class CylinderReport:
    max_curvature_triple: float
    max_origin_triple: float
    stationary: bool
    vector_plane: bool
    plane_rank: int

    def to_dict(self) -> dict:
        return asdict(self)


def cylindrical_check(chart: RuledChart, tol: float = 1e-9, samples: int = 33) -> CylinderReport:
    from .errors import ClassMismatch

    if ruling_class(chart) is not RulingClass.CYLINDRICAL:
        raise ClassMismatch("ruling is not constant")
    s_grid = chart.s_grid(samples)
    tr = np.array([cylinder_triples(chart, s) for s in s_grid])
    pts = np.array([chart.gamma(s) for s in s_grid] + [chart.w(s_grid[0])])
    scale = 1 + np.max(np.abs(pts))
    rank = int(np.linalg.matrix_rank(pts, tol=1e-8 * scale))
    a, b = float(np.max(np.abs(tr[:, 0]))), float(np.max(np.abs(tr[:, 1])))
    stationary = max(a, b) <= tol * scale**3
    return CylinderReport(a, b, bool(stationary), bool(stationary and rank <= 2), rank)


# ---------------------------------------------------------------- maximum principle scan


def _complete_samples(fam: Family, extent: float) -> np.ndarray | None:
    """Samples reaching far out on the complete surface containing the family, or None if unknown."""
    base = fam.spec.id.split("?")[0]
    ch = fam.chart
    if base in ("pr1-2a", "pr1-2b"):
        rho_max = np.arcsinh(extent / fam.spec.params["r"])
        axes = [np.r_[0.0, np.geomspace(1e-3, rho_max, 60)]] + [np.linspace(lo, hi, 9) for lo, hi in ch.domain[1:]]
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.array([ch.position(*u) for u in zip(*(m.ravel() for m in mesh))])
    if isinstance(ch, RuledChart):
        s = np.linspace(*ch.s_range, 9)
        t = np.r_[-np.geomspace(extent, 1e-3, 30), 0.0, np.geomspace(1e-3, extent, 30)]
        return np.array([ch.position(a, b) for a in s for b in t])
    if base in ("plane-x3",):
        c = fam.spec.params["c"]
        r = np.r_[0.0, np.geomspace(1e-3, extent, 40)]
        return np.array([(x * np.cos(p), x * np.sin(p), c) for x in r for p in np.linspace(0, 2 * np.pi, 12)])
    return None


@dataclass
class MaxPrincipleEntry:
    family: str
    alpha: float | None
    n: int
    contained_in_cplus: bool
    far_deltas: list
    status: str


def max_principle_scan(ids=None, deltas=(0.05, 0.1, 0.25, 0.5, 1.0), extent: float = 1e3) -> dict:
    """Check alpha > n on complete spacelike C^+ families that stay a positive distance from the cone.

    Families with x_{n+1} < 0 are mirrored before testing the far-from-cone
    predicate, which is written for the future sheet.
    """
    ids = CATALOG_IDS if ids is None else ids
    entries, violations = [], []
    for fid in ids:
        fam = resolve(fid)
        sp_ = fam.spec
        if sp_.claimed_causal is not CausalClass.SPACELIKE or sp_.claimed_region is not ConeRegion.CPLUS:
            continue
        if sp_.claimed_alpha is None or not sp_.expect_stationary:
            continue
        pts = _complete_samples(fam, extent)
        if pts is None:
            entries.append(MaxPrincipleEntry(sp_.id, sp_.claimed_alpha, sp_.n, False, [], "no complete model, skipped"))
            continue
        q = mink_dot(pts, pts)
        inside = bool(np.all(q < 0))
        mirrored = pts.copy()
        mirrored[:, -1] = np.abs(mirrored[:, -1])
        far = [d for d in deltas if inside and far_from_cone(mirrored, d)]
        if not inside:
            status = "vacuous: complete surface leaves C^+"
        elif not far:
            status = "vacuous: not far from the cone"
        elif sp_.claimed_alpha > sp_.n:
            status = "consistent: alpha > n"
        else:
            status = "VIOLATION: far from cone with alpha <= n"
            violations.append(sp_.id)
        entries.append(MaxPrincipleEntry(sp_.id, sp_.claimed_alpha, sp_.n, inside, far, status))
    # a compact patch near the vertex is far from the cone but is not a complete surface
    patch = resolve("pr1-2a?n=2&r=1")
    pp = np.array([patch.chart.position(r, a) for r in np.linspace(0.0, 0.3, 5) for a in np.linspace(0, 6, 7)])
    patch_note = {
        "family": "pr1-2a?n=2&r=1 patch rho <= 0.3",
        "far_at_0.1": bool(far_from_cone(pp, 0.1)),
        "status": "excluded: not a properly immersed complete surface",
    }
    return {"entries": [asdict(e) for e in entries], "violations": violations, "patch": patch_note,
            "deltas": list(deltas), "extent": extent}


# ---------------------------------------------------------------- th-nli2 witness


def _witness_curve(m, k, a0=0.5, b0=0.3, c0=0.2, d0=0.1):
    s = _s
    x = m / 2 * s**2 + b0
    y = m / 6 * (-1 + 2 * k) * s**3 + a0 * k * s**2 + c0 * s + d0
    z = m / 6 * (-1 + 2 * k) * s**3 + a0 * k * s**2 + (c0 - m) * s + d0 - a0
    return [x, y, z]


def _witness_leads():
    """Leading s-coefficients of the displayed A_0 and A_1 for the normal-form witness."""
    s, k, m = _s, _k, sp.Symbol("m", real=True)
    a0, b0, c0, d0 = sp.symbols("a0 b0 c0 d0", real=True)
    g = sp.Matrix(_witness_curve(m, k, a0, b0, c0, d0))
    w = sp.Matrix([1, -s, -s])
    g1, g2, w1 = g.diff(s), g.diff(s, 2), w.diff(s)

    def dot(u, v):
        return u[0] * v[0] + u[1] * v[1] - u[2] * v[2]

    def tri(u, v, x):
        return sp.Matrix.hstack(u, v, x).T.det()

    A0 = dot(g, g) * tri(g1, w, g2) + k * dot(g1, g1) * tri(g1, w, g)
    A1 = 2 * dot(g, w) * tri(g1, w, g2) - 2 * k * m * tri(g1, w, g) + k * dot(g1, g1) * tri(w1, w, g)
    p0, p1 = sp.Poly(sp.expand(A0), s), sp.Poly(sp.expand(A1), s)
    return (p0.degree(), sp.factor(p0.LC()), p1.degree(), sp.factor(p1.LC()), m, k)


def thnli2_witness_check(m: float = 1.0, trial_k=(-0.7, -1.0, 1.0, 0.5), s_range=(4.0, 5.0),
                         t_range=(0.1, 0.5)) -> dict:
    """Leading-coefficient obstruction and numeric classification of the normal-form witness."""
    from .jets import SymbolicCurve

    d0, lc0, d1, lc1, M, K = _witness_leads()
    lead_display = M**4 * K / 6 * (8 * K**2 + 10 * K - 1)
    a1_display = -M**3 * K / 3 * (7 + 10 * K)
    k_roots = [r for r in sp.solve(sp.Eq(lc1, 0), K) if r != 0]
    report = {
        "A0_degree": int(d0),
        "A1_degree": int(d1),
        "A0_lead": str(lc0),
        "A1_lead": str(lc1),
        "A0_lead_matches_display": bool(sp.simplify(lc0 - lead_display) == 0),
        "A1_lead_matches_display": bool(sp.simplify(lc1 - a1_display) == 0),
        "k_from_A1": [str(r) for r in k_roots],
        "A0_lead_at_k": {str(r): float(lc0.subs({K: r, M: m})) for r in k_roots},
        "displayed_lead_at_minus_7_10": float(lead_display.subs({K: sp.Rational(-7, 10), M: m})),
        "trials": [],
    }
    report["simultaneous_zero"] = any(abs(v) < 1e-12 for v in report["A0_lead_at_k"].values())
    for k in list(trial_k) + [None]:
        mm = 0.0 if k is None else m
        kk = -0.7 if k is None else k
        g = _witness_curve(sp.nsimplify(mm), sp.nsimplify(kk))
        chart = RuledChart(SymbolicCurve(g, _s), SymbolicCurve([1, -_s, -_s], _s), s_range, t_range)
        try:
            cr = classify_ruled(chart)
            report["trials"].append({"m": mm, "k": kk, "verdict": cr.verdict, "alpha": cr.alpha,
                                     "ruling_class": cr.ruling_class.value})
        except (DegenerateMetric, OnConeError, GeometryError) as exc:
            report["trials"].append({"m": mm, "k": kk, "verdict": f"rejected: {type(exc).__name__}"})
    report["none_stationary"] = all(t["verdict"] != "Stationary" for t in report["trials"])
    return report
