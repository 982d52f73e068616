"""
The five production models side by side
=======================================

Run every built-in scenario over 20 years and print start/end outputs,
then the Model 2 output multiplier relative to Model 1.
"""

from aiecon.scenario import builtin_scenarios, compare, run

results = {name: run(cfg) for name, cfg in builtin_scenarios().items()}

print(f"{'scenario':16s} {'Y(0)':>12s} {'Y(20)':>12s}")
for name, r in results.items():
    print(f"{name:16s} {r.y_total[0]:12.4e} {r.y_total[-1]:12.4e}")

for c in ("cn", "us"):
    m = compare(results[f"m2-{c}"], results[f"m1-{c}"]).ratio
    print(f"Model 2 multiplier {c}: t=0 {m[0]:.4f}  t=10 {m[10]:.4f}  t=20 {m[-1]:.4f}")
