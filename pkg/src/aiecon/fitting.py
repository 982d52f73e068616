"""Least-squares fitters for the dynamic parameter curves.

``fit_quadratic`` is ordinary linear least squares. ``fit_logistic`` and the
unpinned form of ``fit_gap_curve`` use :func:`levenberg_marquardt`, a small
damped Gauss-Newton solver with analytic Jacobians. Initial guesses are
derived from the data so every fit is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .dynamics import AgentPath, GapCurve, LogisticParams
from .errors import DataError, DomainError, IllPosedError, SingularFitError

MAX_ITER = 200
XTOL = 1e-10


@dataclass(frozen=True)
class SeriesData:
    """Observations (t, value) with strictly increasing t."""

    t: np.ndarray
    value: np.ndarray
    label: str = ""

    def __post_init__(self):
        t = np.asarray(self.t, dtype=float)
        v = np.asarray(self.value, dtype=float)
        if t.ndim != 1 or t.shape != v.shape:
            raise DataError("t and value must be 1-d arrays of equal length")
        if not (np.all(np.isfinite(t)) and np.all(np.isfinite(v))):
            raise DataError("series contains non-finite values")
        if np.any(np.diff(t) <= 0):
            raise DataError("t must be strictly increasing")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "value", v)

    @classmethod
    def from_points(cls, points, label=""):
        """Build from unordered (t, value) pairs, rejecting duplicate t."""
        pts = sorted((float(a), float(b)) for a, b in points)
        for (a, _), (b, _) in zip(pts, pts[1:]):
            if a == b:
                raise DataError(f"duplicate t = {a:g}")
        if not pts:
            return cls(np.empty(0), np.empty(0), label)
        t, v = zip(*pts)
        return cls(np.array(t), np.array(v), label)

    def __len__(self):
        return len(self.t)

    @property
    def points(self):
        return list(zip(self.t.tolist(), self.value.tolist()))


@dataclass(frozen=True)
class FitResult:
    params: dict
    residual_sum_squares: float
    converged: bool
    iterations: int
    # RSS after each accepted step, starting from the initial guess
    rss_history: tuple = field(default=(), repr=False)

    def __getitem__(self, name):
        return self.params[name]


def levenberg_marquardt(residuals, jacobian, x0, max_iter=MAX_ITER, xtol=XTOL):
    """Minimise ``sum(residuals(x)**2)`` by Marquardt-damped Gauss-Newton.

    A trial step is accepted only if it does not increase the residual sum of
    squares, so the returned history is non-increasing. Convergence is a
    relative step below ``xtol`` or an exactly zero residual.

    Returns
    -------
    x, rss, converged, iterations, history
    """
    x = np.asarray(x0, dtype=float).copy()
    r = residuals(x)
    rss = float(r @ r)
    history = [rss]
    lam = 1e-3
    for it in range(1, max_iter + 1):
        if rss == 0.0:
            return x, rss, True, it - 1, tuple(history)
        J = jacobian(x)
        A = J.T @ J
        grad = J.T @ r
        scale = np.maximum(np.diag(A), 1e-300)
        while True:
            try:
                dx = np.linalg.solve(A + lam * np.diag(scale), -grad)
            except np.linalg.LinAlgError:
                dx = None
            if dx is not None and np.all(np.isfinite(dx)):
                x_new = x + dx
                with np.errstate(all="ignore"):
                    r_new = residuals(x_new)
                rss_new = float(r_new @ r_new)
                if np.isfinite(rss_new) and rss_new <= rss:
                    break
            lam *= 10.0
            if lam > 1e20:
                # no descent direction left at machine precision
                return x, rss, True, it, tuple(history)
        x, r, rss = x_new, r_new, rss_new
        history.append(rss)
        lam = max(lam / 10.0, 1e-12)
        if np.linalg.norm(dx) <= xtol * (np.linalg.norm(x) + xtol):
            return x, rss, True, it, tuple(history)
    return x, rss, False, max_iter, tuple(history)


def fit_quadratic(series: SeriesData) -> FitResult:
    """Least-squares ``c0 + c1 t + c2 t^2``."""
    if len(np.unique(series.t)) < 3:
        raise SingularFitError("a quadratic needs at least 3 distinct t values")
    X = np.vander(series.t, 3, increasing=True)
    coef, _, rank, _ = np.linalg.lstsq(X, series.value, rcond=None)
    if rank < 3:
        raise SingularFitError("quadratic design matrix is rank deficient")
    resid = X @ coef - series.value
    c0, c1, c2 = (float(c) for c in coef)
    return FitResult({"c0": c0, "c1": c1, "c2": c2}, float(resid @ resid), True, 1)


def quadratic_to_path(fit: FitResult) -> AgentPath:
    return AgentPath.from_quadratic(fit["c0"], fit["c1"], fit["c2"])


def _logit(x):
    return np.log(x) - np.log1p(-x)


def _logistic_start(t, frac):
    i = int(np.argmin(np.abs(frac - 0.5)))
    lo, hi = max(i - 1, 0), min(i + 1, len(t) - 1)
    z = _logit(frac)
    k = (z[hi] - z[lo]) / (t[hi] - t[lo])
    if not k > 0:
        k = np.polyfit(t, z, 1)[0]
        if not k > 0:
            raise IllPosedError("series does not increase; cannot seed a logistic fit")
    return k, t[i] - z[i] / k


def fit_logistic(series: SeriesData, saturation: float = 1.0, initial=None) -> FitResult:
    """Fit ``saturation / (1 + exp(-k (t - t0)))`` for (k, t0).

    Parameters
    ----------
    series : SeriesData
        At least two points, every value strictly inside (0, saturation).
    saturation : float
        Upper asymptote, held fixed.
    initial : (k, t0), optional
        Overrides the data-driven starting point.
    """
    if len(series) < 2:
        raise IllPosedError("a logistic fit needs at least 2 points")
    if not saturation > 0:
        raise DomainError(f"saturation must be > 0, got {saturation}")
    t, v = series.t, series.value
    if np.any(v <= 0) or np.any(v >= saturation):
        raise DomainError("logistic fit requires all values inside (0, saturation)")
    x0 = initial if initial is not None else _logistic_start(t, v / saturation)

    def sigma(x):
        return 1.0 / (1.0 + np.exp(-x[0] * (t - x[1])))

    def residuals(x):
        return saturation * sigma(x) - v

    def jacobian(x):
        sg = sigma(x)
        d = saturation * sg * (1.0 - sg)
        return np.column_stack([d * (t - x[1]), -d * x[0]])

    x, rss, ok, it, hist = levenberg_marquardt(residuals, jacobian, x0)
    return FitResult({"k": float(x[0]), "t0": float(x[1])}, rss, ok, it, hist)


def logistic_to_params(fit: FitResult) -> LogisticParams:
    return LogisticParams(fit["k"], fit["t0"])


GAP_PINNABLE = ("delta0", "beta_gap")


def fit_gap_curve(anchors: SeriesData, delta0=None, beta_gap=None) -> FitResult:
    """Fit ``Δ(t) = Δ0 exp(-(t/τ)^β)`` to observed gaps.

    With ``delta0`` pinned the model is linear in log t after the transform
    ``log(-log(Δ/Δ0)) = β log t - β log τ`` and is solved by regression
    (exact when there are as many anchors as free parameters). Without a
    pinned ``delta0``, (log Δ0, log τ, β) are fitted by Levenberg-Marquardt
    on log Δ, which needs at least as many anchors as free parameters.
    """
    t, d = anchors.t, anchors.value
    if np.any(d <= 0):
        raise DomainError("gap anchors must be > 0")
    if np.any(t < 0):
        raise DomainError("gap anchors must have t >= 0")
    if np.any(np.diff(d) >= 0):
        raise IllPosedError("gap anchors must strictly decrease in t")
    n_free = 3 - (delta0 is not None) - (beta_gap is not None)
    if len(anchors) < n_free:
        raise IllPosedError(
            f"{len(anchors)} anchor(s) cannot determine {n_free} free gap parameters; "
            "pin delta0 or supply more anchors"
        )
    if delta0 is not None:
        return _fit_gap_pinned(t, d, float(delta0), beta_gap)
    return _fit_gap_free(t, d, beta_gap)


def _gap_log_rss(t, d, delta0, tau, beta):
    model = np.log(delta0) - (t / tau) ** beta
    r = model - np.log(d)
    return float(r @ r)


def _fit_gap_pinned(t, d, delta0, beta_gap):
    if not delta0 > 0:
        raise DomainError(f"pinned delta0 must be > 0, got {delta0}")
    mask = t > 0
    if np.any(d[~mask] != delta0):
        raise IllPosedError("an anchor at t = 0 must equal the pinned delta0")
    t, d = t[mask], d[mask]
    if np.any(d >= delta0):
        raise IllPosedError("anchors at t > 0 must lie below the pinned delta0")
    y = np.log(-np.log(d / delta0))
    x = np.log(t)
    if beta_gap is not None:
        beta = float(beta_gap)
        log_tau = float(np.mean(x - y / beta))
    else:
        if len(t) < 2 or np.ptp(x) == 0:
            raise IllPosedError("need two anchors at distinct t > 0 to fit tau and beta_gap")
        beta, intercept = np.polyfit(x, y, 1)
        beta = float(beta)
        if not beta > 0:
            raise IllPosedError("anchors imply a non-positive decay exponent")
        log_tau = float(-intercept / beta)
    tau = math.exp(log_tau)
    rss = _gap_log_rss(t, d, delta0, tau, beta)
    return FitResult({"delta0": delta0, "tau": tau, "beta_gap": beta}, rss, True, 0)


def _gap_start(t, d, beta_gap):
    delta0 = d[0] if t[0] == 0 else 1.5 * d[0]
    mask = t > 0
    x = np.log(t[mask])
    y = np.log(-np.log(d[mask] / delta0))
    if beta_gap is not None:
        return delta0, float(np.mean(x - y / beta_gap)), beta_gap
    if len(x) >= 2 and np.ptp(x) > 0:
        beta, intercept = np.polyfit(x, y, 1)
        if beta > 0:
            return delta0, float(-intercept / beta), float(beta)
    return delta0, float(np.mean(x)), 1.0


def _fit_gap_free(t, d, beta_gap):
    delta0_0, log_tau0, beta0 = _gap_start(t, d, beta_gap)
    logt = np.where(t > 0, np.log(np.where(t > 0, t, 1.0)), -np.inf)
    logd = np.log(d)

    def unpack(x):
        beta = x[2] if beta_gap is None else beta_gap
        return x[0], x[1], beta

    def q_of(log_tau, beta):
        with np.errstate(invalid="ignore"):
            return np.where(t > 0, np.exp(beta * (logt - log_tau)), 0.0)

    def residuals(x):
        log_d0, log_tau, beta = unpack(x)
        return log_d0 - q_of(log_tau, beta) - logd

    def jacobian(x):
        _, log_tau, beta = unpack(x)
        q = q_of(log_tau, beta)
        cols = [np.ones_like(t), q * beta]
        if beta_gap is None:
            cols.append(np.where(t > 0, -q * (np.where(t > 0, logt, 0.0) - log_tau), 0.0))
        return np.column_stack(cols)

    x0 = [math.log(delta0_0), log_tau0] + ([beta0] if beta_gap is None else [])
    x, rss, ok, it, hist = levenberg_marquardt(residuals, jacobian, x0)
    log_d0, log_tau, beta = unpack(x)
    params = {"delta0": math.exp(log_d0), "tau": math.exp(log_tau), "beta_gap": float(beta)}
    return FitResult(params, rss, ok, it, hist)


def gap_to_curve(fit: FitResult) -> GapCurve:
    return GapCurve(fit["delta0"], fit["tau"], fit["beta_gap"])
