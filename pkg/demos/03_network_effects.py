"""
Network effects in Models 3 and 5
=================================

The marginal gain from the network multiplier is measured against the same
scenario with eta = 0.
"""

from aiecon.scenario import builtin_scenarios, compare, run

reg = builtin_scenarios()
for name in ("m3-cn", "m3-us", "m5-cn", "m5-us"):
    cfg = reg[name]
    enh = compare(run(cfg), run(cfg.with_overrides(eta=0.0))).enhancement_pct
    print(f"{name}: {enh[0]:.3f}% at t=0 -> {enh[-1]:.3f}% at t=20")
