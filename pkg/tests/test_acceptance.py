"""Exit criteria for the package, one test per criterion at its pinned tolerance."""

import dataclasses

import numpy as np
import pytest

from aiecon import parameters as P
from aiecon.calibration import calibrate_phi_a, calibrate_phi_h, derive_growth_rate, transfer_growth
from aiecon.core import (
    CountryProfile,
    EnhancementParams,
    NetworkParams,
    model1_output,
    model2_output,
    model3_output,
    model4_output,
    model5_output,
)
from aiecon.dynamics import AgentPath, GapCurve, LogisticParams, gap, phi_a_from_gap
from aiecon.fitting import SeriesData, fit_gap_curve, fit_logistic, fit_quadratic, gap_to_curve
from aiecon.scenario import builtin_scenarios, compare, run

REG = builtin_scenarios()


@pytest.fixture(scope="module")
def res():
    return {name: run(cfg) for name, cfg in REG.items()}


def pct_over_twin(cfg, **twin):
    a = run(cfg)
    b = run(cfg.with_overrides(**twin))
    return compare(a, b).enhancement_pct


def test_ac01_human_efficiency(criterion):
    cn = calibrate_phi_h(P.CN_2010, P.ALPHA_CN)
    us = calibrate_phi_h(P.US_2010, P.ALPHA_US)
    criterion("AC1 phi_H calibration", f"cn={cn:.3f} (90), us={us:.3f} (532), tol 2%")
    assert cn == pytest.approx(90, rel=0.02)
    assert us == pytest.approx(532, rel=0.02)


def test_ac02_ai_efficiency(criterion):
    cn = calibrate_phi_a(P.CN_2019, calibrate_phi_h(P.CN_2010, P.ALPHA_CN), P.ALPHA_CN)
    us = calibrate_phi_a(P.US_2019, calibrate_phi_h(P.US_2010, P.ALPHA_US), P.ALPHA_US)
    criterion("AC2 phi_A calibration", f"cn={cn:.3f} (483), us={us:.3f} (688), tol 2%")
    assert cn == pytest.approx(483, rel=0.02)
    assert us == pytest.approx(688, rel=0.02)


def test_ac03_model1(criterion, res):
    cn, us = res["m1-cn"].y_total, res["m1-us"].y_total
    ratio = us[0] / cn[0]
    criterion("AC3 Model 1 outputs", f"cn={cn[0]:.4e} (9.031e12), us={us[0]:.4e} (15.911e12), ratio={ratio:.4f} (1.75)")
    assert np.all(cn == cn[0]) and np.all(us == us[0])
    assert cn[0] == pytest.approx(9.031e12, rel=0.015)
    assert us[0] == pytest.approx(15.911e12, rel=0.015)
    assert ratio == pytest.approx(1.75, abs=0.03)


def test_ac04_model3_network(criterion):
    cn = pct_over_twin(REG["m3-cn"], eta=0.0)
    us = pct_over_twin(REG["m3-us"], eta=0.0)
    criterion("AC4 Model 3 enhancement",
              f"cn {cn[0]:.4f}%->{cn[-1]:.4f}% (0.15->0.42), us {us[0]:.4f}%->{us[-1]:.4f}% (0.31->0.87), tol 0.02pp")
    assert cn[0] == pytest.approx(0.15, abs=0.02)
    assert cn[-1] == pytest.approx(0.42, abs=0.02)
    assert us[0] == pytest.approx(0.31, abs=0.02)
    assert us[-1] == pytest.approx(0.87, abs=0.02)
    assert np.all(us > cn)


def test_ac05_model5_network(criterion, res):
    cn = compare(res["m5-cn"], run(REG["m5-cn"].with_overrides(eta=0.0))).enhancement_pct
    us = compare(res["m5-us"], run(REG["m5-us"].with_overrides(eta=0.0))).enhancement_pct
    criterion("AC5 Model 5 enhancement",
              f"cn {cn[0]:.4f}%->{cn[-1]:.4f}% (0.10->0.33), us {us[0]:.4f}%->{us[-1]:.4f}% (0.13->0.44), tol 0.05pp")
    assert cn[0] == pytest.approx(0.10, abs=0.05)
    assert cn[-1] == pytest.approx(0.33, abs=0.05)
    assert us[0] == pytest.approx(0.13, abs=0.05)
    assert us[-1] == pytest.approx(0.44, abs=0.05)


def test_ac06_growth_transfer(criterion):
    r = derive_growth_rate(5e6, 1.495e8)
    g = transfer_growth(r, 4.45e7)
    criterion("AC6 growth transfer", f"r={r * 100:.4f}% (3.34), g_us={g:.5e} (1.486e6)")
    assert r * 100 == pytest.approx(3.34, abs=0.01)
    assert g == pytest.approx(1.486e6, rel=0.005)


def test_ac07_phi_a_anchors(criterion):
    a = phi_a_from_gap(0.217, 688.0)
    b = phi_a_from_gap(0.034, 688.0)
    criterion("AC7 phi_A,cn anchors", f"{a:.2f} (565.3), {b:.2f} (665.4), tol 1")
    assert a == pytest.approx(565.3, abs=1)
    assert b == pytest.approx(665.4, abs=1)


def test_ac08_fitter_round_trips(criterion):
    t = np.arange(10.0)
    quad_err = 0.0
    for c in (P.PRINTED_QUADRATIC_CN, P.PRINTED_QUADRATIC_US):
        fit = fit_quadratic(SeriesData(t, c[0] + c[1] * t + c[2] * t**2))
        got = np.array([fit["c0"], fit["c1"], fit["c2"]])
        quad_err = max(quad_err, float(np.max(np.abs(got - c) / np.abs(c))))
    tl = np.arange(0.0, 15.0)
    log_err = 0.0
    for k, t0 in ((0.38, 5.0), (0.30, 3.0)):
        fit = fit_logistic(SeriesData(tl, 1 / (1 + np.exp(-k * (tl - t0)))))
        log_err = max(log_err, abs(fit["k"] - k) / k, abs(fit["t0"] - t0) / t0)
    curve = gap_to_curve(fit_gap_curve(P.GAP_ANCHORS, delta0=P.china_gap_curve().delta0))
    gap_err = max(abs(gap(5, curve) - 0.217), abs(gap(6, curve) - 0.034))
    criterion("AC8 fitter round-trips",
              f"quadratic rel err {quad_err:.1e} (1e-6), logistic {log_err:.1e} (1e-4), gap anchors {gap_err:.1e} (1e-3)")
    assert quad_err < 1e-6
    assert log_err < 1e-4
    assert gap_err < 1e-3


def test_ac09_reduction_identities(criterion):
    rng = np.random.default_rng(20240601)
    worst = 0.0
    for _ in range(100):
        prof = CountryProfile(
            "rnd", N=10 ** rng.uniform(6, 9.5), alpha=rng.uniform(0.3, 0.8), R=10 ** rng.uniform(11, 14.5),
            phi_h=rng.uniform(10, 800), phi_a=rng.uniform(10, 1000), omega=rng.uniform(0.01, 0.5),
            human_share=rng.uniform(0.5, 0.99),
            enhancement=EnhancementParams(rng.uniform(0, 1), rng.uniform(0.1, 1), rng.uniform(0, 0.5)),
            network=NetworkParams(rng.uniform(0, 0.2)),
            capability=LogisticParams(0.38, 5.0), agents=AgentPath("linear", 1e8, 5e6),
        )
        s, A = rng.uniform(0, 1), 10 ** rng.uniform(5, 9)
        no_gamma = dataclasses.replace(prof, enhancement=dataclasses.replace(prof.enhancement, gamma=0.0))
        no_eta = dataclasses.replace(prof, network=NetworkParams(0.0))
        no_omega = dataclasses.replace(prof, omega=0.0)
        pairs = [
            (model2_output(no_gamma, s), model1_output(prof.N, prof.human_share * prof.R, prof.alpha, prof.phi_h)),
            (model3_output(no_eta, s, A), model2_output(no_eta, s)),
            (model4_output(no_omega, s, A).y_total, model1_output(prof.N, prof.R, prof.alpha, prof.phi_h)),
            (model5_output(no_eta, s, A).y_total, model4_output(no_eta, s, A).y_total),
        ]
        worst = max(worst, max(abs(a - b) / abs(b) for a, b in pairs))
    criterion("AC9 reduction identities", f"worst rel err {worst:.1e} over 100 points (1e-12)")
    assert worst <= 1e-12


def test_ac10_acceleration_dominance(criterion, res):
    base = res["m4-cn"].y_total
    accel, phia, joint = (res[n].y_total for n in ("m4-cn-accel-g", "m4-cn-phia-t", "m4-cn-joint"))
    ends = {n: float(res[n].y_total[-1] / base[-1]) for n in ("m4-cn-accel-g", "m4-cn-phia-t", "m4-cn-joint")}
    criterion("AC10 adjusted scenarios dominate m4-cn",
              ", ".join(f"{k} x{v:.4f} at t=20" for k, v in ends.items()))
    for y in (accel, phia, joint):
        assert np.all(y >= base)
        assert y[-1] > base[-1]
    assert joint[-1] > accel[-1] and joint[-1] > phia[-1]
