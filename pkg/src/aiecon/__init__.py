"""Deterministic human/AI production models with calibration, curve fitting
and China/U.S. scenario comparisons."""

from .calibration import (
    PUBLISHED_ASSUMPTIONS,
    CalibrationObservation,
    PhiACalibrationAssumptions,
    calibrate_phi_a,
    calibrate_phi_h,
    derive_growth_rate,
    transfer_growth,
)
from .core import (
    CountryProfile,
    EnhancementParams,
    NetworkParams,
    OutputBreakdown,
    model1_output,
    model2_output,
    model3_output,
    model4_output,
    model5_output,
    model_output,
    network_multiplier,
    split_resources,
)
from .dynamics import (
    AgentPath,
    GapCurve,
    LogisticParams,
    agent_count,
    capability,
    gap,
    penetration,
    phi_a_cn,
    phi_a_from_gap,
)
from .fitting import FitResult, SeriesData, fit_gap_curve, fit_logistic, fit_quadratic
from .scenario import (
    ComparisonSeries,
    ScenarioConfig,
    SimulationResult,
    builtin_scenarios,
    compare,
    detect_crossover,
    get_scenario,
    run,
    sensitivity_sweep,
)

__version__ = "0.1.0"
