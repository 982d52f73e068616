"""
Calibrating baseline efficiencies
=================================

Human efficiency is back-solved from 2010 GDP and capital, AI efficiency
from the 2019 output residual once the human share is accounted for.
"""

from aiecon import parameters as P
from aiecon.calibration import (
    PUBLISHED_ASSUMPTIONS,
    calibrate_phi_a,
    calibrate_phi_h,
    derive_growth_rate,
    transfer_growth,
)

for label, y2010, y2019, alpha in [("China", P.CN_2010, P.CN_2019, P.ALPHA_CN),
                                   ("U.S.", P.US_2010, P.US_2019, P.ALPHA_US)]:
    phi_h = calibrate_phi_h(y2010, alpha)
    phi_a = calibrate_phi_a(y2019, phi_h, alpha, PUBLISHED_ASSUMPTIONS)
    print(f"{label:6s} phi_H = {phi_h:8.3f}   phi_A = {phi_a:8.3f}")

# The U.S. agent growth is borrowed from China's relative rate.
r = derive_growth_rate(P.G_CN, P.A0_CN)
print(f"relative growth r_cn = {r:.4%}, g_us = {transfer_growth(r, P.A0_US):.4e} agents/year")
