import math

import numpy as np
import pytest

from aiecon.dynamics import (
    AgentPath,
    GapCurve,
    LogisticParams,
    agent_count,
    capability,
    gap,
    penetration,
    phi_a_cn,
    phi_a_from_gap,
)
from aiecon.errors import DomainError, PathError


class TestCapability:
    def test_inflection(self):
        assert capability(7.3, LogisticParams(1.7, 7.3)) == 0.5

    @pytest.mark.parametrize("k,t0,expected", [(0.38, 5.0, 1 / (1 + math.e**1.9)), (0.30, 3.0, 1 / (1 + math.e**0.9))])
    def test_start_values(self, k, t0, expected):
        assert capability(0.0, LogisticParams(k, t0)) == pytest.approx(expected, rel=1e-14)

    def test_printed_digits(self):
        assert capability(0, LogisticParams(0.38, 5)) == pytest.approx(0.13011, abs=5e-6)
        assert capability(0, LogisticParams(0.30, 3)) == pytest.approx(0.28905, abs=5e-6)

    def test_bounded_and_monotone(self):
        rng = np.random.default_rng(1)
        for _ in range(1000):
            k, t0, t = rng.uniform(0.01, 3), rng.uniform(-20, 20), rng.uniform(-30, 30)
            p = LogisticParams(k, t0)
            a, b = capability(t, p), capability(t + 0.5, p)
            assert 0 < a < 1 or (a == 1.0 and k * (t - t0) > 36)
            assert b >= a

    def test_extreme_arguments_do_not_overflow(self):
        p = LogisticParams(1.0, 0.0)
        assert capability(-1e4, p) == 0.0
        assert capability(1e4, p) == 1.0

    def test_invalid_rate(self):
        with pytest.raises(DomainError):
            LogisticParams(0.0, 1.0)


class TestAgentCount:
    @pytest.mark.parametrize("path", [
        AgentPath("linear", 5.0, 2.0),
        AgentPath("linear-accelerating", 5.0, 2.0, 3.0),
        AgentPath.from_quadratic(5.0, 2.0, -1.0),
    ])
    def test_origin(self, path):
        assert agent_count(0, path) == 5.0

    def test_linear_china(self):
        assert agent_count(20, AgentPath("linear", 1.495e8, 5e6)) == pytest.approx(2.495e8, rel=1e-15)

    def test_printed_quadratic(self):
        path = AgentPath.from_quadratic(56612, 16674, 1088)
        assert path.accel == 2176
        assert agent_count(9, path) == 56612 + 16674 * 9 + 1088 * 81 == 294806

    def test_accelerating_equals_integrated_growth(self):
        path = AgentPath("linear-accelerating", 1.495e8, 5e6, 5e4)
        total = path.A0 + sum(0.5 * (path.growth(t) + path.growth(t + 1)) for t in range(20))
        assert agent_count(20, path) == pytest.approx(total, rel=1e-14)

    def test_zero_accel_matches_linear(self):
        for t in range(25):
            assert agent_count(t, AgentPath("linear-accelerating", 3e7, 1e6, 0.0)) == agent_count(
                t, AgentPath("linear", 3e7, 1e6))

    def test_decelerating_path_turns_negative(self):
        us = AgentPath.from_quadratic(26648, 2416, -140)
        assert agent_count(24, us) > 0
        with pytest.raises(PathError):
            agent_count(25, us)

    def test_relative_rate(self):
        assert AgentPath("linear", 1.495e8, 5e6).r == pytest.approx(0.033445, abs=1e-6)

    def test_bad_kind(self):
        with pytest.raises(DomainError):
            AgentPath("logistic", 1.0, 1.0)


class TestPenetration:
    def test_values(self):
        assert penetration(1.495e8, 7.7e8) == pytest.approx(0.19416, abs=5e-6)
        assert penetration(0, 7.7e8) == 0
        assert penetration(4.45e7, 1.59e8) == pytest.approx(0.27987, abs=5e-6)

    def test_not_clamped(self):
        assert penetration(3.0, 2.0) == 1.5

    def test_zero_population(self):
        with pytest.raises(DomainError):
            penetration(1.0, 0.0)


class TestGap:
    def test_origin(self):
        assert gap(0, GapCurve(0.42, 5.0, 7.0)) == 0.42

    def test_decays_fast_beyond_several_tau(self):
        c = GapCurve(1.0, 4.27, 5.9)
        t = 5 * c.tau + 1e-9
        assert gap(t, c) == pytest.approx(math.exp(-(5.0**5.9)), rel=1e-6)
        assert gap(t, c) < 1e-6 * c.delta0

    def test_non_increasing_and_phi_non_decreasing(self):
        c = GapCurve(0.4, 5.3, 7.3)
        ts = np.linspace(0, 30, 301)
        d = [gap(t, c) for t in ts]
        phi = [phi_a_cn(t, 688.0, c) for t in ts]
        assert all(b <= a for a, b in zip(d, d[1:]))
        assert all(b >= a for a, b in zip(phi, phi[1:]))
        assert max(phi) <= 688.0

    def test_negative_time(self):
        with pytest.raises(DomainError):
            gap(-1.0, GapCurve(0.4, 5.0, 2.0))


class TestPhiA:
    def test_parity(self):
        assert phi_a_from_gap(0.0, 688.0) == 688.0

    @pytest.mark.parametrize("delta,expected", [(0.217, 565.3), (0.034, 665.4)])
    def test_anchors(self, delta, expected):
        assert phi_a_from_gap(delta, 688.0) == pytest.approx(expected, abs=0.05)

    def test_approaches_frontier(self):
        assert phi_a_cn(100.0, 688.0, GapCurve(0.4, 5.0, 2.0)) == pytest.approx(688.0, rel=1e-12)
