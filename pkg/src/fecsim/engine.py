"""Campaign execution: closed-form phase integration and time-series sampling.

Each phase is one constant-current segment, so SOC is linear in time and the
SOC-target crossing of a charge phase is solved algebraically rather than
iteratively; no tolerance accumulates across the hundreds of missions of a
long campaign. FEC is committed once per phase at the mode-change boundary;
interior samples carry exactly interpolated SOC/FEC for plotting only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .battery import (
    BatteryParams,
    BatteryState,
    CurrentSegment,
    Mode,
    SocBoundsError,
    apply_segment,
)
from .mission import CampaignPlan, Phase, Scenario, Slot, apply_scenario, expand, validate

# Interior samples are skipped when they land within this of a phase boundary,
# keeping sample clocks strictly increasing.
_CLOCK_EPS = 1e-12


class SimulationError(Exception):
    """A phase failed during campaign execution, with its location attached."""

    def __init__(self, day: int, mission: int, phase: str, cause: Exception):
        super().__init__(f"day {day}, mission {mission}, phase '{phase}': {cause}")
        self.day = day
        self.mission = mission
        self.phase = phase
        self.cause = cause


class PlanInvalidError(Exception):
    """The plan or scenario failed structural validation."""

    def __init__(self, issues):
        super().__init__("; ".join(str(i) for i in issues))
        self.issues = list(issues)


@dataclass(frozen=True)
class Sample:
    """One time-series record."""

    clock: float
    current: float
    soc: float
    fec: float
    mode: Mode
    day: int
    mission: int


@dataclass(frozen=True)
class TimeSeries:
    """Sampled trajectory of a campaign run."""

    samples: Tuple[Sample, ...]

    def __init__(self, samples) -> None:
        object.__setattr__(self, "samples", tuple(samples))

    def __len__(self) -> int:
        return len(self.samples)

    def __iter__(self):
        return iter(self.samples)


@dataclass(frozen=True)
class PhaseOutcome:
    """Result of running one phase.

    actual_duration may be shorter than the phase's max_duration when a
    charge phase hits its SOC target first. Slot context (day, mission,
    phase_name) and the start state are carried for downstream aggregation.
    """

    actual_duration: float
    terminated_by: str  # "duration_cap" | "soc_target"
    end_state: BatteryState
    start_state: BatteryState
    phase_name: str
    kind: Mode
    day: int = 0
    mission: int = 0


def run_phase(state: BatteryState, phase: Phase, params: BatteryParams) -> PhaseOutcome:
    """Execute one phase from the given state.

    A charge phase with a target_soc runs until the analytically solved
    crossing time t* = (target - soc) * C_nom * soh / i, capped at
    max_duration. All other phases run their full max_duration.

    Raises:
        SocUnderflowError / SocOverflowError: propagated from the segment
            update when the phase would leave the SOC band.
    """
    duration = phase.max_duration
    terminated_by = "duration_cap"
    current = phase.signed_current
    if phase.kind is Mode.CHARGE and phase.target_soc is not None:
        if state.soc >= phase.target_soc:
            return PhaseOutcome(
                actual_duration=0.0,
                terminated_by="soc_target",
                end_state=state,
                start_state=state,
                phase_name=phase.name,
                kind=phase.kind,
            )
        t_cross = (phase.target_soc - state.soc) * (
            params.nominal_capacity * params.soh
        ) / current
        if t_cross <= duration:
            duration = t_cross
            terminated_by = "soc_target"
    end = apply_segment(state, CurrentSegment(current, duration), params)
    return PhaseOutcome(
        actual_duration=duration,
        terminated_by=terminated_by,
        end_state=end,
        start_state=state,
        phase_name=phase.name,
        kind=phase.kind,
    )


def _phase_samples(
    start: BatteryState,
    outcome: PhaseOutcome,
    current: float,
    params: BatteryParams,
    sample_interval: float,
    day: int,
    mission: int,
) -> List[Sample]:
    """Boundary sample plus exactly interpolated interior samples."""
    samples: List[Sample] = []
    mode = Mode.from_current(current)
    t_end = start.clock + outcome.actual_duration
    soc_rate = current / (params.nominal_capacity * params.soh)
    fec_rate = abs(current) / (2.0 * params.nominal_capacity)
    k = 1
    while True:
        dt = k * sample_interval
        if dt >= outcome.actual_duration - _CLOCK_EPS:
            break
        samples.append(
            Sample(
                clock=start.clock + dt,
                current=current,
                soc=start.soc + soc_rate * dt,
                fec=start.fec + fec_rate * dt,
                mode=mode,
                day=day,
                mission=mission,
            )
        )
        k += 1
    samples.append(
        Sample(
            clock=t_end,
            current=current,
            soc=outcome.end_state.soc,
            fec=outcome.end_state.fec,
            mode=mode,
            day=day,
            mission=mission,
        )
    )
    return samples


def run_campaign(
    plan: CampaignPlan,
    scenario: Optional[Scenario] = None,
    sample_interval: float = 1.0 / 60.0,
) -> Tuple[TimeSeries, BatteryState, List[PhaseOutcome]]:
    """Run a full campaign and return (time series, final state, outcomes).

    The scenario's overrides are applied to the profile first; the plan and
    scenario must pass `validate`. The time series holds a sample at every
    phase boundary plus interior samples every sample_interval hours; the
    final state is independent of the sampling interval.

    Raises:
        PlanInvalidError: structural validation failed.
        SimulationError: a phase violated SOC bounds, annotated with
            (day, mission, phase).
    """
    if sample_interval <= 0.0:
        raise ValueError("sample_interval must be > 0")
    issues = validate(plan, [scenario] if scenario is not None else [])
    if issues:
        raise PlanInvalidError(issues)

    profile = apply_scenario(plan.profile, scenario)
    run_plan = CampaignPlan(
        battery=plan.battery,
        profile=profile,
        missions_per_day=plan.missions_per_day,
        days=plan.days,
        initial_soc=plan.initial_soc,
        inter_day_gap=plan.inter_day_gap,
    )

    state = BatteryState(clock=0.0, soc=plan.initial_soc, fec=0.0, mode=Mode.IDLE)
    samples: List[Sample] = [
        Sample(0.0, 0.0, state.soc, state.fec, Mode.IDLE, day=0, mission=0)
    ]
    outcomes: List[PhaseOutcome] = []

    for slot in expand(run_plan):
        try:
            outcome = run_phase(state, slot.phase, plan.battery)
        except SocBoundsError as exc:
            raise SimulationError(slot.day, slot.mission, slot.phase.name, exc) from exc
        outcome = PhaseOutcome(
            actual_duration=outcome.actual_duration,
            terminated_by=outcome.terminated_by,
            end_state=outcome.end_state,
            start_state=outcome.start_state,
            phase_name=outcome.phase_name,
            kind=outcome.kind,
            day=slot.day,
            mission=slot.mission,
        )
        outcomes.append(outcome)
        if outcome.actual_duration > 0.0:
            samples.extend(
                _phase_samples(
                    state,
                    outcome,
                    slot.phase.signed_current,
                    plan.battery,
                    sample_interval,
                    slot.day,
                    slot.mission,
                )
            )
        state = outcome.end_state
    return TimeSeries(samples), state, outcomes
