"""Closed-form production functions for the five human/AI output models.

Model 1 is a plain Cobb-Douglas economy. Model 2 splits capital between
humans and AI and lets the AI share amplify human output; Model 3 adds a
quadratic network multiplier in agent penetration. Model 4 treats AI as an
independent producer with its own Cobb-Douglas term; Model 5 applies the
network multiplier to that AI term.

All power terms are evaluated as ``exp(a*log(x) + b*log(y))`` because the
raw factors (N**alpha near 1e5, R**(1-alpha) near 1e6) multiply into
magnitudes around 1e13.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .dynamics import AgentPath, LogisticParams, penetration
from .errors import DomainError, SingularityError


@dataclass(frozen=True)
class EnhancementParams:
    gamma: float = 0.55
    beta_enh: float = 0.35
    delta: float = 0.20

    def __post_init__(self):
        if self.gamma < 0 or self.delta < 0:
            raise DomainError("gamma and delta must be >= 0")
        if not 0 < self.beta_enh <= 1:
            raise DomainError(f"beta_enh must lie in (0, 1], got {self.beta_enh}")


@dataclass(frozen=True)
class NetworkParams:
    eta: float = 0.07

    def __post_init__(self):
        if self.eta < 0:
            raise DomainError(f"eta must be >= 0, got {self.eta}")


@dataclass(frozen=True)
class CountryProfile:
    """Full parameter bundle for one economy.

    ``phi_h`` doubles as the Model 1-3 efficiency φ0. ``human_share`` is the
    R_H/R split used by Models 2-3; ``omega`` is the AI resource share used
    by Models 4-5.
    """

    name: str
    N: float
    alpha: float
    R: float
    phi_h: float
    phi_a: float
    omega: float
    human_share: float
    enhancement: EnhancementParams = field(default_factory=EnhancementParams)
    network: NetworkParams = field(default_factory=NetworkParams)
    capability: LogisticParams = field(default_factory=lambda: LogisticParams(0.38, 5.0))
    agents: AgentPath = field(default_factory=lambda: AgentPath("linear", 0.0, 0.0))

    def __post_init__(self):
        if not self.N > 0:
            raise DomainError(f"N must be > 0, got {self.N}")
        if not self.R > 0:
            raise DomainError(f"R must be > 0, got {self.R}")
        _check_alpha(self.alpha)
        if self.phi_h < 0 or self.phi_a < 0:
            raise DomainError("efficiencies must be >= 0")
        _check_fraction("omega", self.omega)
        _check_fraction("human_share", self.human_share)


@dataclass(frozen=True)
class OutputBreakdown:
    y_total: float
    y_human: float
    y_ai: float
    multiplier_network: float = 1.0


def _check_alpha(alpha):
    if not 0 < alpha < 1:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")


def _check_fraction(name, x):
    if not 0 <= x <= 1:
        raise DomainError(f"{name} must lie in [0, 1], got {x}")


def _cobb_douglas(phi: float, labor: float, capital: float, alpha: float) -> float:
    # 0**alpha is taken as its right limit, 0
    if phi == 0 or labor == 0 or capital == 0:
        return 0.0
    return phi * math.exp(alpha * math.log(labor) + (1.0 - alpha) * math.log(capital))


def model1_output(N: float, R: float, alpha: float, phi0: float) -> float:
    """Baseline output φ0 N^α R^(1-α)."""
    if not N > 0:
        raise DomainError(f"N must be > 0, got {N}")
    if not R > 0:
        raise DomainError(f"R must be > 0, got {R}")
    _check_alpha(alpha)
    if phi0 < 0:
        raise DomainError(f"phi0 must be >= 0, got {phi0}")
    return _cobb_douglas(phi0, N, R, alpha)


def split_resources(R: float, human_share: float) -> tuple[float, float]:
    """Split capital into (R_H, R_A) with R_H = human_share * R."""
    if not R > 0:
        raise DomainError(f"R must be > 0, got {R}")
    _check_fraction("human_share", human_share)
    r_h = human_share * R
    return r_h, R - r_h


def _check_s(s):
    if not 0 <= s <= 1:
        raise DomainError(f"capability level s must lie in [0, 1], got {s}")


def enhancement_factor(r_h: float, r_a: float, s: float, enh: EnhancementParams) -> float:
    """Bracket term 1 + γ (R_A/R_H)^β (1 + δ s)^β of Model 2."""
    if r_a == 0 or enh.gamma == 0:
        return 1.0
    if r_h == 0:
        raise SingularityError("R_H = 0 with R_A > 0 makes R_A/R_H undefined")
    b = enh.beta_enh
    return 1.0 + enh.gamma * math.exp(b * math.log(r_a / r_h) + b * math.log1p(enh.delta * s))


def model2_output(profile: CountryProfile, s: float) -> float:
    _check_s(s)
    r_h, r_a = split_resources(profile.R, profile.human_share)
    factor = enhancement_factor(r_h, r_a, s, profile.enhancement)
    return _cobb_douglas(profile.phi_h, profile.N, r_h, profile.alpha) * factor


def network_multiplier(A: float, N: float, eta: float) -> float:
    """Network amplification Θ = 1 + η (A/N)^2."""
    if eta < 0:
        raise DomainError(f"eta must be >= 0, got {eta}")
    p = penetration(A, N)
    return 1.0 + eta * p * p


def model3_output(profile: CountryProfile, s: float, A: float) -> float:
    theta = network_multiplier(A, profile.N, profile.network.eta)
    return model2_output(profile, s) * theta


def model4_output(profile: CountryProfile, s: float, A: float) -> OutputBreakdown:
    """Human and independent-AI production on an ω split of capital.

    Parameters
    ----------
    profile : CountryProfile
        Uses ``phi_h``, ``phi_a``, ``omega``, ``N``, ``R``, ``alpha`` and
        ``enhancement.delta``.
    s : float
        Capability level in [0, 1]; scales AI capital by ``1 + delta*s``.
    A : float
        Number of AI agents, the AI term's labor input.

    Returns
    -------
    OutputBreakdown
        ``y_total == y_human + y_ai`` and ``multiplier_network == 1``.
    """
    _check_s(s)
    if A < 0:
        raise DomainError(f"agent count must be >= 0, got {A}")
    w = profile.omega
    _check_fraction("omega", w)
    y_h = _cobb_douglas(profile.phi_h, profile.N, (1.0 - w) * profile.R, profile.alpha)
    ai_capital = w * profile.R * (1.0 + profile.enhancement.delta * s)
    y_a = _cobb_douglas(profile.phi_a, A, ai_capital, profile.alpha)
    return OutputBreakdown(y_h + y_a, y_h, y_a, 1.0)


def model5_output(profile: CountryProfile, s: float, A: float) -> OutputBreakdown:
    base = model4_output(profile, s, A)
    theta = network_multiplier(A, profile.N, profile.network.eta)
    return OutputBreakdown(base.y_human + base.y_ai * theta, base.y_human, base.y_ai, theta)


def model_output(model: int, profile: CountryProfile, s: float, A: float) -> OutputBreakdown:
    """Dispatch to one of the five models and return a uniform breakdown.

    For Models 1-3 the whole output is human output (``y_ai == 0``); Model 3
    reports its network multiplier even though it is already folded into
    ``y_total``.
    """
    if model == 1:
        y = model1_output(profile.N, profile.R, profile.alpha, profile.phi_h)
        return OutputBreakdown(y, y, 0.0, 1.0)
    if model == 2:
        y = model2_output(profile, s)
        return OutputBreakdown(y, y, 0.0, 1.0)
    if model == 3:
        theta = network_multiplier(A, profile.N, profile.network.eta)
        y = model2_output(profile, s) * theta
        return OutputBreakdown(y, y, 0.0, theta)
    if model == 4:
        return model4_output(profile, s, A)
    if model == 5:
        return model5_output(profile, s, A)
    raise DomainError(f"model must be one of 1..5, got {model!r}")
