"""Published China/U.S. inputs and the calibrated country profiles built from them.

Efficiencies are not hard-coded: ``phi_h`` is calibrated on 2010 GDP and
capital (with the 2019 employed population, the only one available) and
``phi_a`` on 2019 GDP under :data:`~aiecon.calibration.PUBLISHED_ASSUMPTIONS`.
Profiles carry 2019 capital.
"""

from __future__ import annotations

from functools import lru_cache

from .calibration import (
    PUBLISHED_ASSUMPTIONS,
    CalibrationObservation,
    calibrate_phi_a,
    calibrate_phi_h,
    derive_growth_rate,
    transfer_growth,
)
from .core import CountryProfile, EnhancementParams, NetworkParams
from .dynamics import AgentPath, LogisticParams
from .fitting import SeriesData, fit_gap_curve, gap_to_curve

N_CN, N_US = 7.7e8, 1.59e8
ALPHA_CN, ALPHA_US = 0.58625, 0.59709

CN_2010 = CalibrationObservation(2010, gdp=6.19e12, capital=3.93e13, population=N_CN)
CN_2019 = CalibrationObservation(2019, gdp=14.58e12, capital=9.96e13, population=N_CN)
US_2010 = CalibrationObservation(2010, gdp=15.05e12, capital=6.1e13, population=N_US)
US_2019 = CalibrationObservation(2019, gdp=21.54e12, capital=6.91e13, population=N_US)

HUMAN_SHARE = 0.85
ENHANCEMENT = EnhancementParams(gamma=0.55, beta_enh=0.35, delta=0.20)
ETA_DEFAULT = 0.07
ETA_MODEL3 = 0.04
OMEGA_CN, OMEGA_US = 0.05, 0.15
OMEGA_MODEL4 = 0.15

# 2.3e8 users x 65% and 1.59e8 workers x 28%, as rounded when published
A0_CN = 1.495e8
A0_US = 4.45e7
G_CN = 5e6
# g_CN(t) = 5e6 + 5e4 t in the accelerated-agent scenario
G_CN_ACCEL = 5e4

# Relative U.S.-China gap: end of 2023 and end of 2024, in years since start of 2019
GAP_ANCHORS = SeriesData.from_points([(5.0, 0.217), (6.0, 0.034)], label="gap")

PRINTED_QUADRATIC_CN = (56612.0, 16674.0, 1088.0)
PRINTED_QUADRATIC_US = (26648.0, 2416.0, -140.0)


def growth_us() -> float:
    return transfer_growth(derive_growth_rate(G_CN, A0_CN), A0_US)


@lru_cache(maxsize=None)
def china() -> CountryProfile:
    phi_h = calibrate_phi_h(CN_2010, ALPHA_CN)
    phi_a = calibrate_phi_a(CN_2019, phi_h, ALPHA_CN, PUBLISHED_ASSUMPTIONS)
    return CountryProfile(
        name="cn",
        N=N_CN,
        alpha=ALPHA_CN,
        R=CN_2019.capital,
        phi_h=phi_h,
        phi_a=phi_a,
        omega=OMEGA_CN,
        human_share=HUMAN_SHARE,
        enhancement=ENHANCEMENT,
        network=NetworkParams(ETA_DEFAULT),
        capability=LogisticParams(k=0.38, t0=5.0),
        agents=AgentPath("linear", A0_CN, G_CN),
    )


@lru_cache(maxsize=None)
def united_states() -> CountryProfile:
    phi_h = calibrate_phi_h(US_2010, ALPHA_US)
    phi_a = calibrate_phi_a(US_2019, phi_h, ALPHA_US, PUBLISHED_ASSUMPTIONS)
    return CountryProfile(
        name="us",
        N=N_US,
        alpha=ALPHA_US,
        R=US_2019.capital,
        phi_h=phi_h,
        phi_a=phi_a,
        omega=OMEGA_US,
        human_share=HUMAN_SHARE,
        enhancement=ENHANCEMENT,
        network=NetworkParams(ETA_DEFAULT),
        capability=LogisticParams(k=0.30, t0=3.0),
        agents=AgentPath("linear", A0_US, growth_us()),
    )


@lru_cache(maxsize=None)
def china_gap_curve():
    """Gap curve through both anchors with Δ(0) set so φ_A,cn(0) equals the calibrated value."""
    delta0 = united_states().phi_a / china().phi_a - 1.0
    return gap_to_curve(fit_gap_curve(GAP_ANCHORS, delta0=delta0))
