"""Scenario registry, simulation runner and comparison analytics."""

from __future__ import annotations

import dataclasses
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import parameters as P
from .core import CountryProfile, model_output
from .dynamics import AgentPath, GapCurve, agent_count, capability, penetration, phi_a_cn
from .errors import ConfigError, ModelError, ShapeError, SingularityError

DEFAULT_HORIZON = 20
COLUMNS = ("t", "s", "A", "p", "theta", "y_total", "y_human", "y_ai")

# override key -> (profile attribute, nested attribute or None)
_PROFILE_KEYS = {
    "N": ("N", None),
    "R": ("R", None),
    "alpha": ("alpha", None),
    "phi_h": ("phi_h", None),
    "phi_a": ("phi_a", None),
    "omega": ("omega", None),
    "human_share": ("human_share", None),
    "gamma": ("enhancement", "gamma"),
    "beta_enh": ("enhancement", "beta_enh"),
    "delta": ("enhancement", "delta"),
    "eta": ("network", "eta"),
    "k": ("capability", "k"),
    "t0": ("capability", "t0"),
    "a0": ("agents", "A0"),
    "g": ("agents", "g"),
    "accel": ("agents", "accel"),
    "agent_kind": ("agents", "kind"),
}
_GAP_KEYS = ("delta0", "tau", "beta_gap", "phi_a_frontier")
OVERRIDABLE = tuple(_PROFILE_KEYS) + _GAP_KEYS


@dataclass(frozen=True)
class ScenarioConfig:
    """One simulation setup.

    ``overrides`` maps names from :data:`OVERRIDABLE` to values applied on
    top of ``profile``. When ``gap`` is set, the AI efficiency becomes
    ``phi_a_frontier / (1 + gap(t))`` at every step instead of the profile
    constant.
    """

    name: str
    model: int
    profile: CountryProfile
    horizon: int = DEFAULT_HORIZON
    epoch_label: str = "2019"
    overrides: dict = field(default_factory=dict)
    gap: GapCurve | None = None
    phi_a_frontier: float | None = None
    description: str = ""

    def __post_init__(self):
        if self.model not in (1, 2, 3, 4, 5):
            raise ConfigError(f"model must be one of 1..5, got {self.model!r}")
        if int(self.horizon) != self.horizon or self.horizon < 1:
            raise ConfigError(f"horizon must be an integer >= 1, got {self.horizon!r}")
        unknown = sorted(set(self.overrides) - set(OVERRIDABLE))
        if unknown:
            raise ConfigError(f"unknown override(s) {unknown}; known: {', '.join(OVERRIDABLE)}")

    def with_overrides(self, **changes) -> ScenarioConfig:
        merged = {**self.overrides, **changes}
        return dataclasses.replace(self, overrides=merged)

    def resolved(self) -> tuple[CountryProfile, GapCurve | None, float | None]:
        """Apply overrides; return (profile, gap curve, frontier AI efficiency)."""
        profile = self.profile
        nested: dict[str, dict] = {}
        top = {}
        for key, value in self.overrides.items():
            if key in _GAP_KEYS:
                continue
            attr, sub = _PROFILE_KEYS[key]
            if sub is None:
                top[attr] = value
            else:
                nested.setdefault(attr, {})[sub] = value
        agents = nested.get("agents")
        if agents is not None and agents.get("accel", 0) != 0 and "kind" not in agents:
            if profile.agents.kind == "linear":
                agents["kind"] = "linear-accelerating"
        for attr, changes in nested.items():
            top[attr] = dataclasses.replace(getattr(profile, attr), **changes)
        if top:
            profile = dataclasses.replace(profile, **top)

        gap, frontier = self.gap, self.phi_a_frontier
        gap_changes = {k: self.overrides[k] for k in ("delta0", "tau", "beta_gap") if k in self.overrides}
        if gap_changes:
            if gap is None:
                raise ConfigError("gap curve overrides need a scenario with a gap curve")
            gap = dataclasses.replace(gap, **gap_changes)
        if "phi_a_frontier" in self.overrides:
            frontier = self.overrides["phi_a_frontier"]
        if gap is not None and frontier is None:
            raise ConfigError("a gap curve needs phi_a_frontier")
        return profile, gap, frontier

    def parameters(self) -> dict:
        """Flat resolved parameter set, recorded alongside every result."""
        profile, gap, frontier = self.resolved()
        out = {
            "model": self.model,
            "horizon": int(self.horizon),
            "epoch_label": self.epoch_label,
            "country": profile.name,
            "N": profile.N,
            "alpha": profile.alpha,
            "R": profile.R,
            "phi_h": profile.phi_h,
            "phi_a": profile.phi_a,
            "omega": profile.omega,
            "human_share": profile.human_share,
            "gamma": profile.enhancement.gamma,
            "beta_enh": profile.enhancement.beta_enh,
            "delta": profile.enhancement.delta,
            "eta": profile.network.eta,
            "k": profile.capability.k,
            "t0": profile.capability.t0,
            "agent_kind": profile.agents.kind,
            "a0": profile.agents.A0,
            "g": profile.agents.g,
            "accel": profile.agents.accel,
            "currency": "nominal USD",
        }
        if gap is not None:
            out.update(delta0=gap.delta0, tau=gap.tau, beta_gap=gap.beta_gap, phi_a_frontier=frontier)
        return out


@dataclass(eq=False)
class SimulationResult:
    scenario: str
    model: int
    parameters: dict
    t: np.ndarray
    s: np.ndarray
    A: np.ndarray
    p: np.ndarray
    theta: np.ndarray
    y_total: np.ndarray
    y_human: np.ndarray
    y_ai: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, SimulationResult):
            return NotImplemented
        return (
            self.scenario == other.scenario
            and self.model == other.model
            and self.parameters == other.parameters
            and all(np.array_equal(getattr(self, c), getattr(other, c)) for c in COLUMNS)
        )

    def __len__(self):
        return len(self.t)

    @property
    def horizon(self) -> int:
        return len(self.t) - 1

    def records(self) -> list[dict]:
        cols = [getattr(self, c).tolist() for c in COLUMNS]
        return [dict(zip(COLUMNS, row)) for row in zip(*cols)]


@dataclass(eq=False)
class ComparisonSeries:
    a: str
    b: str
    t: np.ndarray
    ratio: np.ndarray
    enhancement_pct: np.ndarray
    crossover_t: int | None


@dataclass(frozen=True)
class SweepRow:
    value: float
    final_y_total: float
    mean_enhancement_pct: float
    result: SimulationResult = field(repr=False, compare=False)


def run(config: ScenarioConfig) -> SimulationResult:
    """Evaluate the configured model at every integer step 0..horizon."""
    profile, gap, frontier = config.resolved()
    T = int(config.horizon)
    cols = {c: np.empty(T + 1) for c in COLUMNS}
    for t in range(T + 1):
        try:
            s = capability(t, profile.capability)
            A = agent_count(t, profile.agents)
            p = penetration(A, profile.N)
            prof_t = profile
            if gap is not None:
                prof_t = dataclasses.replace(profile, phi_a=phi_a_cn(t, frontier, gap))
            out = model_output(config.model, prof_t, s, A)
        except ModelError as exc:
            raise type(exc)(f"{config.name}: step t={t}: {exc}") from exc
        for name, val in zip(COLUMNS, (t, s, A, p, out.multiplier_network, out.y_total, out.y_human, out.y_ai)):
            cols[name][t] = val
    return SimulationResult(config.name, config.model, config.parameters(), **cols)


def compare(a: SimulationResult, b: SimulationResult) -> ComparisonSeries:
    """Per-step ratio a/b, enhancement in percent, and first step with a >= b."""
    if len(a) != len(b):
        raise ShapeError(f"horizon mismatch: {a.horizon} vs {b.horizon}")
    if np.any(b.y_total == 0):
        raise SingularityError(f"{b.scenario} has zero output; ratio undefined")
    ratio = a.y_total / b.y_total
    enhancement = (a.y_total - b.y_total) / b.y_total * 100.0
    hits = np.flatnonzero(a.y_total >= b.y_total)
    crossover = int(a.t[hits[0]]) if hits.size else None
    return ComparisonSeries(a.scenario, b.scenario, a.t.copy(), ratio, enhancement, crossover)


def detect_crossover(cn: SimulationResult, us: SimulationResult) -> int | None:
    return compare(cn, us).crossover_t


def sensitivity_sweep(config: ScenarioConfig, param: str, grid, max_workers: int | None = None):
    """Re-run ``config`` once per grid value of ``param``.

    Each row reports the final-step output and the mean per-step
    enhancement (percent) over the unmodified configuration. Rows follow
    the order of ``grid`` regardless of ``max_workers``.
    """
    if param not in OVERRIDABLE:
        raise ConfigError(f"parameter {param!r} is not overridable; known: {', '.join(OVERRIDABLE)}")
    grid = list(grid)
    if not grid:
        raise ConfigError("sweep grid is empty")
    base = run(config)
    configs = [config.with_overrides(**{param: v}) for v in grid]
    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers) as pool:
            results = list(pool.map(run, configs))
    else:
        results = [run(c) for c in configs]
    rows = []
    for value, res in zip(grid, results):
        enh = compare(res, base).enhancement_pct
        rows.append(SweepRow(value, float(res.y_total[-1]), float(enh.mean()), res))
    return rows


def builtin_scenarios() -> dict[str, ScenarioConfig]:
    cn, us = P.china(), P.united_states()
    accel = {"agent_kind": "linear-accelerating", "accel": P.G_CN_ACCEL}
    phia_t = {"gap": P.china_gap_curve(), "phi_a_frontier": us.phi_a}
    specs = [
        ("m1-cn", 1, cn, {}, {}, "Model 1, pure human production"),
        ("m1-us", 1, us, {}, {}, "Model 1, pure human production"),
        ("m2-cn", 2, cn, {}, {}, "Model 2, AI-enhanced human production"),
        ("m2-us", 2, us, {}, {}, "Model 2, AI-enhanced human production"),
        ("m3-cn", 3, cn, {"eta": P.ETA_MODEL3}, {}, "Model 3, network effects at eta=0.04"),
        ("m3-us", 3, us, {"eta": P.ETA_MODEL3}, {}, "Model 3, network effects at eta=0.04"),
        ("m4-cn", 4, cn, {"omega": P.OMEGA_MODEL4}, {}, "Model 4, independent AI at omega=0.15"),
        ("m4-us", 4, us, {"omega": P.OMEGA_MODEL4}, {}, "Model 4, independent AI at omega=0.15"),
        ("m5-cn", 5, cn, {}, {}, "Model 5, independent AI with network effects"),
        ("m5-us", 5, us, {}, {}, "Model 5, independent AI with network effects"),
        ("m4-cn-accel-g", 4, cn, {"omega": P.OMEGA_MODEL4, **accel}, {},
         "Model 4 with accelerating agent growth g(t) = 5e6 + 5e4 t"),
        ("m4-cn-phia-t", 4, cn, {"omega": P.OMEGA_MODEL4}, phia_t,
         "Model 4 with time-varying phi_A driven by the capability gap"),
        ("m4-cn-joint", 4, cn, {"omega": P.OMEGA_MODEL4, **accel}, phia_t,
         "Model 4 with accelerating agents and time-varying phi_A"),
    ]
    return {
        name: ScenarioConfig(name, model, prof, overrides=dict(ov), description=desc, **extra)
        for name, model, prof, ov, extra, desc in specs
    }


def get_scenario(name: str) -> ScenarioConfig:
    reg = builtin_scenarios()
    try:
        return reg[name]
    except KeyError:
        raise ConfigError(f"unknown scenario {name!r}; known: {', '.join(reg)}") from None
