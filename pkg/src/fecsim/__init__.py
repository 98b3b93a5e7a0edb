"""Deterministic battery-lifetime mission simulator.

Models UAV charge/discharge/idle cycles as piecewise-constant-current
segments, tracks state of charge by coulomb counting and cycling stress by
full-equivalent-cycle counting, and compares mission scenarios to quantify
cycling-related degradation differences.
"""

from .battery import (
    BatteryParams,
    BatteryState,
    CurrentSegment,
    Mode,
    SocBoundsError,
    SocOverflowError,
    SocUnderflowError,
    apply_segment,
    delta_fec,
    fec_closed_form,
    mean_c_rate,
    soc_delta,
)
from .mission import (
    CampaignPlan,
    MissionProfile,
    Phase,
    Scenario,
    Slot,
    ValidationIssue,
    apply_scenario,
    expand,
    validate,
)
from .engine import (
    PhaseOutcome,
    PlanInvalidError,
    Sample,
    SimulationError,
    TimeSeries,
    run_campaign,
    run_phase,
)
from .analysis import (
    AnalysisError,
    CampaignSummary,
    ComparisonReport,
    DegradationEstimate,
    MissionStats,
    compare,
    estimate_relative_degradation,
    summarize,
)
from .config import ConfigError, parse_config, serialize_config

__version__ = "0.1.0"

__all__ = [
    "BatteryParams",
    "BatteryState",
    "CurrentSegment",
    "Mode",
    "SocBoundsError",
    "SocOverflowError",
    "SocUnderflowError",
    "apply_segment",
    "delta_fec",
    "fec_closed_form",
    "mean_c_rate",
    "soc_delta",
    "CampaignPlan",
    "MissionProfile",
    "Phase",
    "Scenario",
    "Slot",
    "ValidationIssue",
    "apply_scenario",
    "expand",
    "validate",
    "PhaseOutcome",
    "PlanInvalidError",
    "Sample",
    "SimulationError",
    "TimeSeries",
    "run_campaign",
    "run_phase",
    "AnalysisError",
    "CampaignSummary",
    "ComparisonReport",
    "DegradationEstimate",
    "MissionStats",
    "compare",
    "estimate_relative_degradation",
    "summarize",
    "ConfigError",
    "parse_config",
    "serialize_config",
]
