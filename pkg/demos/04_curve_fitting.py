"""
Fitting the dynamic parameter curves
====================================

Quadratic agent growth, a logistic capability curve and the capability-gap
curve that drives China's time-varying AI efficiency.
"""

import numpy as np

from aiecon import parameters as P
from aiecon.dynamics import gap, phi_a_cn
from aiecon.fitting import SeriesData, fit_gap_curve, fit_logistic, fit_quadratic, gap_to_curve

t = np.arange(10.0)
c0, c1, c2 = P.PRINTED_QUADRATIC_CN
agents = SeriesData(t, c0 + c1 * t + c2 * t**2, label="cn robots")
print("quadratic:", fit_quadratic(agents).params)

rng = np.random.default_rng(0)
tl = np.arange(0.0, 12.0)
noisy = np.clip(1 / (1 + np.exp(-0.38 * (tl - 5))) + rng.normal(0, 0.01, tl.size), 0.01, 0.99)
fit = fit_logistic(SeriesData(tl, noisy))
print(f"logistic: k={fit['k']:.4f} t0={fit['t0']:.4f} in {fit.iterations} iterations")

# Two anchors fix tau and beta once Delta(0) is pinned; here Delta(0) makes
# phi_A,cn(0) equal its calibrated value.
delta0 = P.united_states().phi_a / P.china().phi_a - 1
curve = gap_to_curve(fit_gap_curve(P.GAP_ANCHORS, delta0=delta0))
print(f"gap curve: delta0={curve.delta0:.4f} tau={curve.tau:.4f} beta={curve.beta_gap:.4f}")
for year in range(0, 9):
    print(f"  t={year}  gap={gap(year, curve):.4f}  phi_A,cn={phi_a_cn(year, P.united_states().phi_a, curve):7.2f}")
