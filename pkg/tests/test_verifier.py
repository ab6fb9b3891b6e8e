import json

import numpy as np
import pytest
import sympy as sp

from lorentz_stationary.catalog import resolve
from lorentz_stationary.errors import ClassMismatch
from lorentz_stationary.jets import SymbolicCurve
from lorentz_stationary.ruled import RuledChart
from lorentz_stationary.surface import SymbolicChart
from lorentz_stationary.verifier import (
    CASE_MU,
    REPRESENTATIVE_K,
    OdeBranchSpec,
    cylindrical_check,
    inversion_transport,
    max_principle_scan,
    ode_branch_explore,
    ode_case,
    random_branch_sweep,
    residual_scan,
    scan_family,
    thnli2_witness_check,
    transport_family,
)

S = sp.Symbol("s", real=True)
s_, t_ = sp.symbols("s t", real=True)


# ---------------------------------------------------------------- residual scan


def test_residual_scan_hyperbolic():
    ch = SymbolicChart([s_, t_, sp.sqrt(1 + s_**2 + t_**2)], [s_, t_], [(-1, 1)] * 2)
    rep = residual_scan(ch, 2.0, (7, 7))
    assert rep.passed and rep.max_residual <= 1e-8
    assert rep.fitted_alpha_mean == pytest.approx(2) and rep.fitted_alpha_std <= 1e-10
    assert not residual_scan(ch, 2.1, (7, 7)).passed


def test_residual_scan_counts_cone_exclusions():
    # x3 = 1 over [-1.5, 1.5]^2 meets the unit circle on the cone
    ch = SymbolicChart([s_, t_, 1], [s_, t_], [(-1.5, 1.5)] * 2)
    rep = residual_scan(ch, 0.0, (31, 31))
    counts = {e["reason"]: e["count"] for e in rep.exclusions}
    assert counts.get("cone_band", 0) > 0


def test_residual_report_is_json():
    rep = scan_family("pr1-3a?n=2&r=1", shape=(6, 6))
    d = json.loads(json.dumps(rep.to_dict()))
    assert d["verdict"] == "pass" and d["family"] == "pr1-3a?n=2&r=1"


def test_scan_family_alpha_override():
    assert not scan_family("pr1-2a?n=2&r=1", alpha=4.0, shape=(6, 6)).passed


def test_residual_scan_deterministic():
    a = scan_family("thli-1", shape=(8, 8)).to_dict()
    b = scan_family("thli-1", shape=(8, 8)).to_dict()
    assert a == b


# ---------------------------------------------------------------- inversion transport


def test_transport_timelike_keeps_alpha():
    rep = transport_family("pr1-3a?n=2&r=1", (8, 8))
    assert rep.image_regions == ["C-"]
    assert rep.fitted_alpha_image_mean == pytest.approx(2)
    assert rep.matches["stated"] and rep.matches["causal"]


def test_transport_vertical_plane():
    rep = transport_family("plane-x1?c=1", (8, 8))
    assert rep.fitted_alpha_image_mean == pytest.approx(4)
    assert rep.hausdorff <= 1e-6


@pytest.mark.parametrize("fid", ["pr1-2a?n=2&r=1", "pr1-3a?n=2&r=1", "thli-1", "plane-x3?c=0.5&part=plus"])
def test_transport_signed_law_and_causal_rule(fid):
    rep = transport_family(fid, (8, 8))
    assert rep.signed_law_discrepancy_max <= 1e-9
    assert rep.matches["causal"]
    assert rep.fitted_alpha_image_std <= 1e-9


def test_transport_flags_recorded_discrepancies():
    sp_ = transport_family("pr1-2a?n=2&r=1", (8, 8))
    tl = transport_family("pr1-3a?n=2&r=1", (8, 8))
    assert sp_.flags["hv_discrepancy"] and not sp_.flags["proof_relation_discrepancy"]
    assert tl.flags["proof_relation_discrepancy"] and not tl.flags["hv_discrepancy"]


def test_transport_fd_matches_exact():
    a = transport_family("pr1-3a?n=2&r=1", (6, 6), method="exact")
    b = transport_family("pr1-3a?n=2&r=1", (6, 6), method="fd")
    assert b.fitted_alpha_image_mean == pytest.approx(a.fitted_alpha_image_mean, abs=1e-4)


def test_transport_image_of_plane_x3_minus():
    rep = transport_family("plane-x3?c=0.5&part=minus", (8, 8))
    assert rep.fitted_alpha_image_mean == pytest.approx(-4)
    assert rep.hausdorff <= 1e-6


def test_transport_plain_chart():
    ch = SymbolicChart([s_, t_, sp.sqrt(1 + s_**2 + t_**2)], [s_, t_], [(-1, 1)] * 2)
    rep = inversion_transport(ch, (5, 5), 2.0)
    assert rep.fitted_alpha_image_mean == pytest.approx(2)


# ---------------------------------------------------------------- ODE branches


@pytest.mark.parametrize("mu, k, case", [(1, 1, "a"), (1, 2, "b"), (1, -1, "c"), (-1, 1, "d"), (-1, 3, "e"),
                                         (-1, -2, "f")])
def test_ode_case(mu, k, case):
    assert ode_case(mu, k) == case


def test_ode_case_rejects_bad_input():
    with pytest.raises(ValueError):
        ode_case(0, 1)
    with pytest.raises(ValueError):
        ode_case(1, 0)


@pytest.mark.parametrize("case", list("abcdef"))
def test_ode_representatives_contradict(case):
    rep = ode_branch_explore(OdeBranchSpec(CASE_MU[case], REPRESENTATIVE_K[case]))
    assert rep.amub_sup <= 1e-9
    assert rep.obstruction_nonzero
    assert rep.verdict.startswith("contradiction")


def test_ode_case_a_coefficient():
    rep = ode_branch_explore(OdeBranchSpec(1, 1.0, (1, 0, 0, 0)))
    assert any(abs(v + 1) <= 1e-9 for v in rep.coefficients.values())


def test_ode_printed_case_f_fails_first_equation():
    rep = ode_branch_explore(OdeBranchSpec(-1, -2.25, printed=True))
    assert rep.amub_sup > 1e-3


def test_ode_half_branch_solution():
    rep = ode_branch_explore(OdeBranchSpec(1, 0.5))
    assert rep.verdict.startswith("solution")


@pytest.mark.parametrize("case", list("abcdef"))
def test_random_sweep(case):
    reps = random_branch_sweep(case, draws=10)
    assert all(r.verdict.startswith("contradiction") or r.verdict.startswith("b = 0") for r in reps)


def test_random_sweep_deterministic():
    a = [r.to_dict() for r in random_branch_sweep("c", draws=5, seed=7)]
    b = [r.to_dict() for r in random_branch_sweep("c", draws=5, seed=7)]
    assert json.dumps(a, default=str) == json.dumps(b, default=str)


# ---------------------------------------------------------------- cylinders


def cyl(g, w=(0, 0, 1), s_range=(0.2, 1.2)):
    return RuledChart(SymbolicCurve(list(g), S), SymbolicCurve(list(w), S), s_range, (-0.3, 0.3))


def test_cylinder_circle_not_stationary():
    assert not cylindrical_check(cyl([sp.cos(S), sp.sin(S), 0])).stationary


def test_cylinder_plane_stationary():
    rep = cylindrical_check(cyl([S, 2 * S, 0]))
    assert rep.stationary and rep.vector_plane


def test_cylinder_over_line_through_origin():
    c = 0.6
    rep = cylindrical_check(cyl([S * c, S, -S * c], (1, 0, 0), (0.5, 1.5)))
    assert rep.stationary


def test_cylinder_check_rejects_non_constant_ruling():
    with pytest.raises(ClassMismatch):
        cylindrical_check(resolve("thli-1").chart)


# ---------------------------------------------------------------- maximum principle


def test_max_principle_scan():
    rep = max_principle_scan()
    assert rep["violations"] == []
    status = {e["family"]: e["status"] for e in rep["entries"]}
    assert status["pr1-2a?n=2&r=1&shifted=1"] == "consistent: alpha > n"
    assert status["pr1-2a?n=2&r=1"].startswith("vacuous")
    assert rep["patch"]["far_at_0.1"] and rep["patch"]["status"].startswith("excluded")


# ---------------------------------------------------------------- normal-form witness


def test_witness_leading_coefficients():
    rep = thnli2_witness_check()
    assert rep["A0_degree"] == 5 and rep["A1_degree"] == 3
    assert not rep["A0_lead_matches_display"] and not rep["A1_lead_matches_display"]
    m, k = sp.symbols("m k", real=True)
    assert sp.simplify(sp.sympify(rep["A1_lead"], locals={"m": m, "k": k}) + 5 * k * m**3 * (2 * k - 1) / 3) == 0
    assert rep["k_from_A1"] == ["1/2"] and rep["simultaneous_zero"]
    assert rep["none_stationary"]


def test_witness_trials_are_deterministic():
    a, b = thnli2_witness_check(), thnli2_witness_check()
    assert a["trials"] == b["trials"]
    assert np.all([t["verdict"] != "Stationary" for t in a["trials"]])
