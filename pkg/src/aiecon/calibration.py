"""Back-solving baseline efficiencies from observed GDP and capital."""

from __future__ import annotations

from dataclasses import dataclass

from .core import _check_alpha, _cobb_douglas
from .errors import CalibrationInfeasibleError, DomainError


@dataclass(frozen=True)
class CalibrationObservation:
    year: int
    gdp: float
    capital: float
    population: float

    def __post_init__(self):
        for name in ("gdp", "capital", "population"):
            v = getattr(self, name)
            if not v > 0:
                raise DomainError(f"observation {name} must be > 0, got {v}")


@dataclass(frozen=True)
class PhiACalibrationAssumptions:
    """Structural assumptions used to split observed output into human and AI parts."""

    omega: float
    s: float
    delta: float
    agents: float

    def __post_init__(self):
        if not 0 < self.omega < 1:
            raise DomainError(f"omega must lie in (0, 1), got {self.omega}")
        if not 0 <= self.s <= 1:
            raise DomainError(f"s must lie in [0, 1], got {self.s}")
        if self.delta < 0:
            raise DomainError(f"delta must be >= 0, got {self.delta}")
        if not self.agents > 0:
            raise DomainError(f"agents must be > 0, got {self.agents}")


# The decomposition assumptions behind the published AI efficiencies; these
# differ from the scenario defaults and are only used for calibration.
PUBLISHED_ASSUMPTIONS = PhiACalibrationAssumptions(omega=0.1, s=0.5, delta=0.2, agents=1e8)


def calibrate_phi_h(obs: CalibrationObservation, alpha: float) -> float:
    """Human efficiency φ_H = Y / (N^α R^(1-α))."""
    _check_alpha(alpha)
    return obs.gdp / _cobb_douglas(1.0, obs.population, obs.capital, alpha)


def human_output(obs: CalibrationObservation, phi_h: float, alpha: float, omega: float) -> float:
    return _cobb_douglas(phi_h, obs.population, (1.0 - omega) * obs.capital, alpha)


def calibrate_phi_a(
    obs2019: CalibrationObservation,
    phi_h: float,
    alpha: float,
    assume: PhiACalibrationAssumptions = PUBLISHED_ASSUMPTIONS,
) -> float:
    """AI efficiency that attributes the output residual Y - Y_H to the AI term.

    Raises
    ------
    CalibrationInfeasibleError
        If the human term alone already meets or exceeds observed output.
    """
    _check_alpha(alpha)
    if phi_h < 0:
        raise DomainError(f"phi_h must be >= 0, got {phi_h}")
    y_h = human_output(obs2019, phi_h, alpha, assume.omega)
    residual = obs2019.gdp - y_h
    if residual <= 0:
        raise CalibrationInfeasibleError(
            f"human output {y_h:.6g} >= observed GDP {obs2019.gdp:.6g}; no room for AI output"
        )
    ai_capital = assume.omega * obs2019.capital * (1.0 + assume.delta * assume.s)
    return residual / _cobb_douglas(1.0, assume.agents, ai_capital, alpha)


def derive_growth_rate(g: float, A0: float) -> float:
    """Relative agent growth rate r = g / A0."""
    if A0 <= 0:
        raise DomainError(f"A0 must be > 0, got {A0}")
    return g / A0


def transfer_growth(r: float, A0_target: float) -> float:
    """Absolute growth for another economy with the same relative rate."""
    if A0_target < 0:
        raise DomainError(f"A0_target must be >= 0, got {A0_target}")
    return r * A0_target
