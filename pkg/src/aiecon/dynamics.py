"""Time-dependent parameter curves.

Capability follows a logistic curve, the agent population follows a linear or
quadratic path, and the frontier/follower capability gap decays as a
stretched exponential which in turn sets the follower's AI efficiency.
Time is measured in years from the scenario epoch (t = 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, PathError

AGENT_PATH_KINDS = ("linear", "linear-accelerating", "quadratic")


@dataclass(frozen=True)
class LogisticParams:
    k: float
    t0: float

    def __post_init__(self):
        if not self.k > 0:
            raise DomainError(f"logistic growth rate k must be > 0, got {self.k}")


@dataclass(frozen=True)
class AgentPath:
    """Deterministic AI-agent population path.

    ``A(t) = A0 + g*t + 0.5*accel*t**2`` for every kind; ``linear`` forces
    ``accel == 0``. For ``linear-accelerating`` the annual increment is
    ``g + accel*t``; for ``quadratic`` the curve came from a polynomial fit
    (see :meth:`from_quadratic`).
    """

    kind: str
    A0: float
    g: float
    accel: float = 0.0

    def __post_init__(self):
        if self.kind not in AGENT_PATH_KINDS:
            raise DomainError(
                f"unknown agent path kind {self.kind!r}; expected one of {AGENT_PATH_KINDS}"
            )
        if not self.A0 >= 0:
            raise DomainError(f"A0 must be >= 0, got {self.A0}")
        if self.kind == "linear" and self.accel != 0:
            raise DomainError("a linear agent path cannot carry an acceleration term")

    @classmethod
    def from_quadratic(cls, c0: float, c1: float, c2: float) -> AgentPath:
        """Build a path from printed polynomial coefficients ``c0 + c1 t + c2 t^2``."""
        return cls("quadratic", c0, c1, 2.0 * c2)

    @property
    def r(self) -> float:
        """Relative growth rate g/A0."""
        if self.A0 == 0:
            raise DomainError("relative growth rate undefined for A0 = 0")
        return self.g / self.A0

    def growth(self, t: float) -> float:
        """Annual increment dA/dt at time t."""
        return self.g + self.accel * t


@dataclass(frozen=True)
class GapCurve:
    delta0: float
    tau: float
    beta_gap: float

    def __post_init__(self):
        if not self.delta0 >= 0:
            raise DomainError(f"delta0 must be >= 0, got {self.delta0}")
        if not self.tau > 0:
            raise DomainError(f"tau must be > 0, got {self.tau}")
        if not self.beta_gap > 0:
            raise DomainError(f"beta_gap must be > 0, got {self.beta_gap}")


def capability(t: float, params: LogisticParams) -> float:
    """AI capability level s(t) = 1 / (1 + exp(-k (t - t0)))."""
    z = -params.k * (t - params.t0)
    # both branches avoid overflow in exp for large |z|
    if z >= 0:
        e = math.exp(-z)
        return e / (1.0 + e)
    return 1.0 / (1.0 + math.exp(z))


def agent_count(t: float, path: AgentPath) -> float:
    if t < 0:
        raise DomainError(f"agent paths are defined for t >= 0, got {t}")
    a = path.A0 + path.g * t + 0.5 * path.accel * t * t
    if a < 0:
        raise PathError(
            f"agent path ({path.kind}) is negative at t={t}: A={a:.6g}; "
            "the decelerating path has passed its peak"
        )
    return a


def penetration(A: float, N: float) -> float:
    """Agent penetration p = A/N (not clamped to 1)."""
    if N <= 0:
        raise DomainError(f"population N must be > 0, got {N}")
    if A < 0:
        raise DomainError(f"agent count must be >= 0, got {A}")
    return A / N


def gap(t: float, curve: GapCurve) -> float:
    """Relative capability gap Δ0 * exp(-(t/τ)^β)."""
    if t < 0:
        raise DomainError(f"gap curve is defined for t >= 0, got {t}")
    return curve.delta0 * math.exp(-((t / curve.tau) ** curve.beta_gap))


def phi_a_from_gap(delta: float, phi_a_frontier: float) -> float:
    """Follower AI efficiency for a given relative gap to the frontier."""
    if not phi_a_frontier > 0:
        raise DomainError(f"frontier AI efficiency must be > 0, got {phi_a_frontier}")
    if delta <= -1:
        raise DomainError(f"relative gap must exceed -1, got {delta}")
    return phi_a_frontier / (1.0 + delta)


def phi_a_cn(t: float, phi_a_us: float, curve: GapCurve) -> float:
    """Time-varying Chinese AI efficiency φ_A,us / (1 + Δ(t))."""
    return phi_a_from_gap(gap(t, curve), phi_a_us)
