"""Aggregation of campaign runs and A-vs-B scenario comparison.

Depth of discharge (DoD) is defined per mission as mission-start SOC minus
the minimum SOC reached in that mission. The headline cycling-reduction
figure is 1 - variant_total_fec / baseline_total_fec; for two campaigns
that differ only in flight current and recharge to the same target, this
equals 1 - I_variant / I_baseline exactly, since both discharge and
recharge throughput scale with the flight current.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .engine import PhaseOutcome, TimeSeries
from .mission import CampaignPlan, INTER_DAY_GAP
from .battery import Mode

MINUTES_PER_HOUR = 60.0


class AnalysisError(Exception):
    """Inputs to an aggregation do not belong together."""


@dataclass(frozen=True)
class MissionStats:
    """Per-mission aggregates.

    charge_complete_clock is minutes from mission start to the termination
    of the mission's last charge phase, or None if the mission has no
    charge phase.
    """

    day: int
    mission: int
    min_soc: float
    depth_of_discharge: float
    delta_fec: float
    charge_complete_clock: Optional[float]


@dataclass(frozen=True)
class CampaignSummary:
    """Whole-campaign aggregates for one scenario."""

    scenario_name: str
    total_fec: float
    fec_per_day: float
    fec_per_mission: float
    min_soc_overall: float
    mean_dod: float
    total_flight_hours: float
    mean_charge_complete_minutes: Optional[float]
    per_mission: Tuple[MissionStats, ...]


@dataclass(frozen=True)
class ComparisonReport:
    """Baseline-vs-variant degradation comparison.

    Cycling-driven state-of-health loss is taken as proportional to FEC, so
    the relative degradation reduction equals the FEC reduction.
    """

    baseline: CampaignSummary
    variant: CampaignSummary
    fec_reduction_fraction: float
    dod_reduction_fraction: float
    charge_time_saving_minutes: Optional[float]
    soh_note: str


@dataclass(frozen=True)
class DegradationEstimate:
    """Relative (and optionally absolute) cycling-degradation statement."""

    statement: str
    relative_factor: float  # variant cycling SOH loss as a fraction of baseline's
    baseline_delta_soh: Optional[float] = None
    variant_delta_soh: Optional[float] = None


def summarize(
    series: TimeSeries,
    outcomes: List[PhaseOutcome],
    plan: CampaignPlan,
    scenario_name: Optional[str] = None,
) -> CampaignSummary:
    """Aggregate a campaign run into per-mission and campaign-level stats.

    Raises:
        AnalysisError: the outcomes do not match the plan's structure
            (e.g. produced by a run of a different plan).
    """
    mission_outcomes = [o for o in outcomes if o.phase_name != INTER_DAY_GAP]
    expected = plan.days * plan.missions_per_day * len(plan.profile.phases)
    if len(mission_outcomes) != expected:
        raise AnalysisError(
            f"outcome count {len(mission_outcomes)} does not match plan "
            f"({plan.days} days x {plan.missions_per_day} missions x "
            f"{len(plan.profile.phases)} phases = {expected})"
        )
    if series.samples and not math.isclose(
        series.samples[-1].fec, outcomes[-1].end_state.fec, rel_tol=0, abs_tol=0.0
    ):
        raise AnalysisError("time series and outcomes disagree on final FEC")

    per_mission: List[MissionStats] = []
    n_phases = len(plan.profile.phases)
    for i in range(0, len(mission_outcomes), n_phases):
        chunk = mission_outcomes[i : i + n_phases]
        start = chunk[0].start_state
        min_soc = min(min(o.start_state.soc, o.end_state.soc) for o in chunk)
        charge_clock = None
        for o in chunk:
            if o.kind is Mode.CHARGE:
                charge_clock = (o.end_state.clock - start.clock) * MINUTES_PER_HOUR
        per_mission.append(
            MissionStats(
                day=chunk[0].day,
                mission=chunk[0].mission,
                min_soc=min_soc,
                depth_of_discharge=start.soc - min_soc,
                delta_fec=chunk[-1].end_state.fec - start.fec,
                charge_complete_clock=charge_clock,
            )
        )

    total_fec = outcomes[-1].end_state.fec
    n_missions = len(per_mission)
    charge_clocks = [
        m.charge_complete_clock for m in per_mission if m.charge_complete_clock is not None
    ]
    return CampaignSummary(
        scenario_name=scenario_name if scenario_name is not None else plan.profile.name,
        total_fec=total_fec,
        fec_per_day=total_fec / plan.days,
        fec_per_mission=total_fec / n_missions,
        min_soc_overall=min(m.min_soc for m in per_mission),
        mean_dod=sum(m.depth_of_discharge for m in per_mission) / n_missions,
        total_flight_hours=sum(
            o.actual_duration for o in mission_outcomes if o.kind is Mode.DISCHARGE
        ),
        mean_charge_complete_minutes=(
            sum(charge_clocks) / len(charge_clocks) if charge_clocks else None
        ),
        per_mission=tuple(per_mission),
    )


def compare(baseline: CampaignSummary, variant: CampaignSummary) -> ComparisonReport:
    """Build the A-vs-B report with FEC, DoD, and charge-time deltas.

    Raises:
        AnalysisError: mission counts or total flight hours differ, so the
            scenarios are not comparable like-for-like.
    """
    if len(baseline.per_mission) != len(variant.per_mission):
        raise AnalysisError(
            f"mission counts differ: {len(baseline.per_mission)} vs "
            f"{len(variant.per_mission)}"
        )
    if not math.isclose(
        baseline.total_flight_hours, variant.total_flight_hours, rel_tol=1e-9
    ):
        raise AnalysisError(
            f"flight hours differ: {baseline.total_flight_hours} vs "
            f"{variant.total_flight_hours}"
        )
    fec_reduction = 1.0 - variant.total_fec / baseline.total_fec
    dod_reduction = (
        1.0 - variant.mean_dod / baseline.mean_dod if baseline.mean_dod > 0.0 else 0.0
    )
    saving = None
    if (
        baseline.mean_charge_complete_minutes is not None
        and variant.mean_charge_complete_minutes is not None
    ):
        saving = baseline.mean_charge_complete_minutes - variant.mean_charge_complete_minutes
    return ComparisonReport(
        baseline=baseline,
        variant=variant,
        fec_reduction_fraction=fec_reduction,
        dod_reduction_fraction=dod_reduction,
        charge_time_saving_minutes=saving,
        soh_note=(
            "Cycling-driven state-of-health loss is proportional to accumulated "
            f"FEC, so the variant's cycling degradation is "
            f"{(1.0 - fec_reduction) * 100.0:.2f}% of the baseline's "
            f"(a {fec_reduction * 100.0:.2f}% reduction)."
        ),
    )


def estimate_relative_degradation(
    report: ComparisonReport, k_cycle: Optional[float] = None
) -> DegradationEstimate:
    """Turn the comparison into a degradation statement.

    Without k_cycle only the relative claim is made. With a user-supplied
    aging coefficient (SOH loss per FEC) the absolute SOH deltas are also
    reported; no coefficient is built in.

    Raises:
        ValueError: k_cycle is negative.
    """
    if k_cycle is not None and k_cycle < 0.0:
        raise ValueError(f"k_cycle must be >= 0, got {k_cycle}")
    relative = 1.0 - report.fec_reduction_fraction
    statement = (
        f"cycling degradation reduced by {report.fec_reduction_fraction * 100.0:.2f}%"
    )
    if k_cycle is None:
        return DegradationEstimate(statement=statement, relative_factor=relative)
    base = k_cycle * report.baseline.total_fec
    var = k_cycle * report.variant.total_fec
    return DegradationEstimate(
        statement=(
            f"{statement}; absolute SOH loss {base:.6f} (baseline) vs {var:.6f} (variant) "
            f"at {k_cycle} SOH/FEC"
        ),
        relative_factor=relative,
        baseline_delta_soh=base,
        variant_delta_soh=var,
    )
