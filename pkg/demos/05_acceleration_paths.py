"""
Accelerating China's AI agents and capability
=============================================

Compare Model 4 baselines with the adjusted Chinese scenarios and look for
a crossover with the U.S.
"""

from aiecon.scenario import builtin_scenarios, compare, detect_crossover, run, sensitivity_sweep

reg = builtin_scenarios()
base = run(reg["m4-cn"])
us = run(reg["m4-us"])
for name in ("m4-cn-accel-g", "m4-cn-phia-t", "m4-cn-joint"):
    r = run(reg[name])
    gain = compare(r, base).enhancement_pct[-1]
    print(f"{name:14s} +{gain:6.2f}% over m4-cn at t=20, crossover with m4-us: {detect_crossover(r, us)}")
print(f"{'m4-cn':14s} crossover with m4-us: {detect_crossover(base, us)}")

print("\nsweep of baseline agent growth g on m4-cn:")
for row in sensitivity_sweep(reg["m4-cn"], "g", [3e6, 5e6, 1e7]):
    print(f"  g={row.value:.0e}  Y(20)={row.final_y_total:.4e}  mean gain {row.mean_enhancement_pct:+.3f}%")
