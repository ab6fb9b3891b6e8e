import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from lorentz_stationary.errors import DegenerateMetric, IndeterminateAlpha, OnConeError, WrongCausalType
from lorentz_stationary.minkowski import mink_dot
from lorentz_stationary.surface import (
    ChartJet2,
    PositionChart,
    SymbolicChart,
    fit_alpha,
    fundamental_forms,
    graph_residual,
    jets_from_position,
    mean_curvature,
    principal_curvatures,
    stationarity_residual,
)

s, t = sp.symbols("s t", real=True)


def hyperbolic_graph(r=1.0):
    return SymbolicChart([s, t, sp.sqrt(s**2 + t**2 + r**2)], [s, t], [(-1, 1), (-1, 1)])


def pseudosphere(r=1.0, p0=(0, 0, 0)):
    exprs = [p0[0] + r * sp.cosh(t) * sp.cos(s), p0[1] + r * sp.cosh(t) * sp.sin(s), p0[2] + r * sp.sinh(t)]
    return SymbolicChart(exprs, [s, t], [(-1, 1), (-1, 1)])


def oriented_H(jet, sign_h):
    """H for the normal whose <N,X> has the sign ``sign_h``."""
    ff = fundamental_forms(jet)
    flip = 1 if np.sign(mink_dot(ff.N, jet.X)) == sign_h else -1
    return flip * mean_curvature(jet)


# ---------------------------------------------------------------- jets


def test_fd_jets_plane_exact():
    j = jets_from_position(lambda a, b: np.array([a, b, 0.0]), 0.3, -0.2)
    for v in (j.Xss, j.Xst, j.Xtt):
        np.testing.assert_allclose(v, 0, atol=1e-9)


def test_fd_jets_quadratic():
    j = jets_from_position(lambda a, b: np.array([a, b, a * a]), 1.0, 0.0, h=1e-4)
    np.testing.assert_allclose(j.Xss, (0, 0, 2), atol=1e-7)


def test_fd_jets_circle():
    j = jets_from_position(lambda a, b: np.array([np.cos(a), np.sin(a), b]), 0.0, 0.0)
    np.testing.assert_allclose(j.Xs, (0, 1, 0), atol=1e-7)
    np.testing.assert_allclose(j.Xss, (-1, 0, 0), atol=1e-7)


def test_fd_step_must_be_positive():
    with pytest.raises(ValueError):
        jets_from_position(lambda a, b: np.array([a, b, 0.0]), 0, 0, h=0)


# ---------------------------------------------------------------- forms


def test_forms_plane():
    ff = fundamental_forms(SymbolicChart([s, t, 1], [s, t], [(0, 1), (0, 1)]).jet(0.2, 0.3))
    assert (ff.E, ff.F, ff.G) == (1, 0, 1)
    assert ff.eps_normal == -1
    np.testing.assert_allclose(np.abs(ff.N), (0, 0, 1))
    assert ff.e == ff.f == ff.g == 0


def test_forms_hyperbolic_vertex():
    j = hyperbolic_graph().jet(0, 0)
    ff = fundamental_forms(j)
    assert ff.eps_normal == -1
    assert abs(abs(mink_dot(ff.N, j.X)) - 1) < 1e-14
    np.testing.assert_allclose(np.abs(ff.N), np.abs(j.X))


def test_forms_pseudosphere_timelike():
    j = pseudosphere().jet(0, 0)
    np.testing.assert_allclose(j.X, (1, 0, 0))
    assert fundamental_forms(j).eps_normal == 1


def test_forms_invariants_random():
    rng = np.random.default_rng(3)
    ch = pseudosphere(1.3, (0.2, -0.1, 0.4))
    for a, b in rng.uniform(-1, 1, size=(20, 2)):
        ff = fundamental_forms(ch.jet(a, b))
        assert abs(abs(mink_dot(ff.N, ff.N)) - 1) < 1e-10
        assert np.sign(ff.det) == -ff.eps_normal


def test_degenerate_metric():
    j = ChartJet2(np.array([1.0, 0, 0]), np.array([1.0, 0, 1]), np.array([0.0, 1, 0]) * 0, *(np.zeros(3),) * 3)
    with pytest.raises(DegenerateMetric):
        fundamental_forms(j)


def test_mean_curvature_examples():
    j = hyperbolic_graph().jet(0.3, -0.4)
    assert oriented_H(j, -1) == pytest.approx(2)  # N = p gives <N,p> = -1
    j = pseudosphere(2.0).jet(0.3, 0.2)
    assert oriented_H(j, -1) == pytest.approx(1)  # N = -p/2 gives <N,p> = -2
    assert mean_curvature(SymbolicChart([s, t, 1], [s, t], [(0, 1), (0, 1)]).jet(0.1, 0.1)) == 0


def test_principal_curvatures_hyperbolic_umbilic():
    k = principal_curvatures(hyperbolic_graph().jet(0.5, 0.2))
    np.testing.assert_allclose(np.abs(k), [1, 1], atol=1e-12)


# ---------------------------------------------------------------- residual and fit


def test_residual_examples():
    jh = hyperbolic_graph().jet(0.2, 0.7)
    assert abs(stationarity_residual(jh, 2)) <= 1e-8
    assert stationarity_residual(jh, 0) == pytest.approx(mean_curvature(jh))
    assert abs(stationarity_residual(pseudosphere().jet(0.4, -0.3), 2)) <= 1e-8


def test_residual_on_cone_rejected():
    with pytest.raises(OnConeError):
        stationarity_residual(SymbolicChart([s, t, s], [s, t], [(0, 1), (0, 1)]).jet(1.0, 0.0), 1)


def test_fit_alpha_examples():
    assert fit_alpha(hyperbolic_graph().jet(0.1, 0.2)) == pytest.approx(2)
    with pytest.raises(IndeterminateAlpha):
        fit_alpha(SymbolicChart([s, t, 0], [s, t], [(0.5, 1), (0, 1)]).jet(0.7, 0.3))
    # S^2_1(p0, 1) with <p0,p0> = 1, at a point of C^-
    j = pseudosphere(1.0, (1, 0, 0)).jet(0.3, 0.2)
    assert mink_dot(j.X, j.X) > 0
    assert fit_alpha(j) == pytest.approx(4)


def test_fit_alpha_zero_residual():
    j = pseudosphere(1.7, (0.3, 0.1, -0.2)).jet(0.2, 0.5)
    assert abs(stationarity_residual(j, fit_alpha(j))) < 1e-12


def test_fit_alpha_3d_hyperbolic():
    u, v, w = sp.symbols("u v w", real=True)
    ch = SymbolicChart([u, v, w, sp.sqrt(1 + u**2 + v**2 + w**2)], [u, v, w], [(-1, 1)] * 3)
    assert fit_alpha(ch.jet(0.2, -0.3, 0.5)) == pytest.approx(3)


# ---------------------------------------------------------------- invariance properties


def swapped(j: ChartJet2) -> ChartJet2:
    return ChartJet2(j.X, j.Xt, j.Xs, j.Xtt, j.Xst, j.Xss)


pts = st.tuples(st.floats(-0.9, 0.9), st.floats(-0.9, 0.9))


@given(pts)
@settings(max_examples=40)
def test_orientation_covariance(p):
    j = pseudosphere(1.0, (1, 0, 0)).jet(*p)
    if abs(mink_dot(j.X, j.X)) < 1e-3:
        return
    js = swapped(j)
    assert mean_curvature(js) == pytest.approx(-mean_curvature(j), abs=1e-10)
    assert stationarity_residual(js, 1.3) == pytest.approx(-stationarity_residual(j, 1.3), abs=1e-10)
    assert fit_alpha(js) == pytest.approx(fit_alpha(j), rel=1e-10)


@given(pts, st.floats(0.1, 20))
@settings(max_examples=40)
def test_scale_invariance(p, lam):
    j = hyperbolic_graph(0.7).jet(*p)
    assert fit_alpha(j.scaled(lam)) == pytest.approx(fit_alpha(j), rel=1e-9)


def test_reparametrization_invariance():
    base = [s + sp.Rational(1, 3) * t, t**2 / 2 - s, sp.sqrt(4 + (s + t / 3) ** 2 + (t**2 / 2 - s) ** 2)]
    ch = SymbolicChart(base, [s, t], [(-1, 1), (-1, 1)])
    sig = s**3 / 3 + s
    re = SymbolicChart([e.subs(s, sig) for e in base], [s, t], [(-1, 1), (-1, 1)])
    for a, b in [(0.1, 0.2), (-0.6, 0.4), (0.8, -0.7)]:
        a_re = float(sp.nsolve(sig - a, s, a))
        assert fit_alpha(re.jet(a_re, b)) == pytest.approx(fit_alpha(ch.jet(a, b)), abs=1e-8)


def test_position_chart_matches_symbolic():
    ch = pseudosphere(1.2)
    pc = PositionChart(lambda a, b: ch.position(a, b), ch.domain, h=1e-4)
    assert mean_curvature(pc.jet(0.2, 0.3)) == pytest.approx(mean_curvature(ch.jet(0.2, 0.3)), abs=1e-6)


@pytest.mark.parametrize("chart, point", [
    (hyperbolic_graph(), (0.3, 0.4)),
    (SymbolicChart([s * sp.cosh(t), t**2 + s, 2 + s * t + s**3], [s, t], [(-1, 1)] * 2), (0.2, 0.3)),
    (SymbolicChart([s, t, sp.sin(s) * sp.cos(t) + 3], [s, t], [(-1, 1)] * 2), (0.4, 0.1)),
])
def test_fd_jets_converge_order_two(chart, point):
    exact = mean_curvature(chart.jet(*point))
    errs = []
    for h in (4e-3, 2e-3):
        j = jets_from_position(lambda a, b: chart.position(a, b), *point, h=h)
        errs.append(abs(mean_curvature(j) - exact))
    assert 3.6 <= errs[0] / errs[1] <= 4.4


# ---------------------------------------------------------------- graphs


def hyperbolic_graph_data(q, r=1.0):
    q = np.asarray(q, float)
    u = np.sqrt(q @ q + r * r)
    return u, q / u, np.eye(len(q)) / u - np.outer(q, q) / u**3


@pytest.mark.parametrize("n", [2, 3])
def test_graph_hyperbolic(n):
    rng = np.random.default_rng(n)
    for q in rng.uniform(-2, 2, size=(10, n)):
        u, Du, D2u = hyperbolic_graph_data(q)
        assert abs(graph_residual(u, Du, D2u, q, n)) <= 1e-8
        assert abs(graph_residual(u, Du, D2u, q, n + 1)) > 1e-3


def test_graph_constant_is_maximal():
    q = np.array([0.1, 0.2])
    assert graph_residual(1.0, np.zeros(2), np.zeros((2, 2)), q, 0.0) == 0


def test_graph_timelike_pseudosphere():
    # x3 = sqrt(|q|^2 - 1) is the upper half of S^2_1(1)
    for q in ([1.5, 0.3], [-0.4, 2.0]):
        q = np.array(q)
        u = np.sqrt(q @ q - 1)
        Du = q / u
        D2u = np.eye(2) / u - np.outer(q, q) / u**3
        assert abs(graph_residual(u, Du, D2u, q, 2, "timelike")) <= 1e-8


def test_graph_causal_type_checked():
    with pytest.raises(WrongCausalType):
        graph_residual(2.0, np.array([2.0, 0]), np.zeros((2, 2)), np.zeros(2), 1, "spacelike")
    with pytest.raises(WrongCausalType):
        graph_residual(2.0, np.array([0.1, 0]), np.zeros((2, 2)), np.zeros(2), 1, "timelike")


def test_graph_and_chart_agree():
    ch = hyperbolic_graph()
    for q in ([0.3, 0.4], [-0.8, 0.1]):
        u, Du, D2u = hyperbolic_graph_data(q)
        assert abs(graph_residual(u, Du, D2u, np.array(q), 2)) <= 1e-8
        assert abs(stationarity_residual(ch.jet(*q), 2)) <= 1e-8
