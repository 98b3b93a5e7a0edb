"""Declarative mission and campaign model.

A campaign is a battery plus a mission profile repeated on a daily schedule.
Profiles are ordered lists of constant-current phases; scenarios override
phase current magnitudes (e.g. flight at 8 A instead of 9.5 A). These types
are plain data; `validate` reports structural problems as data rather than
exceptions so a CLI can list them all at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Tuple

from .battery import BatteryParams, Mode

HOURS_PER_DAY = 24.0

# Reserved phase name for the synthetic idle slot between days.
INTER_DAY_GAP = "inter_day_gap"


@dataclass(frozen=True)
class Phase:
    """One constant-current phase of a mission.

    Attributes:
        name: human label, unique within a profile.
        kind: discharge, idle, or charge.
        current_magnitude: amperes, >= 0 (0 for idle, > 0 otherwise).
        max_duration: hours, > 0. A charge phase with a target_soc terminates
            at whichever comes first of max_duration and the target.
        target_soc: optional SOC target in (0, 1]; charge phases only.
    """

    name: str
    kind: Mode
    current_magnitude: float
    max_duration: float
    target_soc: Optional[float] = None

    @property
    def signed_current(self) -> float:
        """Signed amperes under the positive-charge convention."""
        if self.kind is Mode.DISCHARGE:
            return -self.current_magnitude
        if self.kind is Mode.CHARGE:
            return self.current_magnitude
        return 0.0


@dataclass(frozen=True)
class MissionProfile:
    """Ordered, non-empty sequence of phases forming one mission."""

    name: str
    phases: Tuple[Phase, ...]

    def __init__(self, name: str, phases) -> None:
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "phases", tuple(phases))

    def phase_names(self) -> List[str]:
        return [p.name for p in self.phases]


@dataclass(frozen=True)
class CampaignPlan:
    """A mission profile repeated on a daily schedule against one battery.

    Attributes:
        battery: battery parameters.
        profile: the mission flown each time.
        missions_per_day: missions flown back-to-back each day (>= 1).
        days: number of days (>= 1).
        initial_soc: SOC at campaign start (default 0.95).
        inter_day_gap: idle hours between the last mission of a day and the
            first of the next. None means "the rest of a 24 h day", computed
            from the profile's maximum durations; self-discharge is zero so
            the value only shifts the time axis.
    """

    battery: BatteryParams
    profile: MissionProfile
    missions_per_day: int
    days: int
    initial_soc: float = 0.95
    inter_day_gap: Optional[float] = None

    def resolved_inter_day_gap(self) -> float:
        """Gap in hours, defaulting to what is left of a 24 h day.

        The default uses phase max_durations (an upper bound on realized
        mission time, since charge phases may terminate early on target).
        """
        if self.inter_day_gap is not None:
            return self.inter_day_gap
        mission_hours = sum(p.max_duration for p in self.profile.phases)
        return max(0.0, HOURS_PER_DAY - self.missions_per_day * mission_hours)


@dataclass(frozen=True)
class Scenario:
    """Named set of per-phase current-magnitude overrides."""

    name: str
    overrides: Dict[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class ValidationIssue:
    """One structural problem found by `validate`."""

    location: str
    message: str

    def __str__(self) -> str:
        return f"{self.location}: {self.message}"


@dataclass(frozen=True)
class Slot:
    """One executable phase occurrence after schedule expansion.

    day and mission are 1-based; the synthetic inter-day gap slot carries
    mission index missions_per_day + 1 so (day, mission, position) ordering
    stays lexicographic.
    """

    day: int
    mission: int
    phase: Phase


def _validate_phase(phase: Phase, where: str, issues: List[ValidationIssue]) -> None:
    if phase.current_magnitude < 0.0:
        issues.append(ValidationIssue(where, "current magnitude must be >= 0"))
    if phase.kind is Mode.IDLE and phase.current_magnitude != 0.0:
        issues.append(
            ValidationIssue(
                where,
                f"idle phase must carry zero current, got {phase.current_magnitude} A",
            )
        )
    if phase.kind is not Mode.IDLE and phase.current_magnitude == 0.0:
        issues.append(ValidationIssue(where, f"{phase.kind.value} phase needs current > 0"))
    if not phase.max_duration > 0.0:
        issues.append(ValidationIssue(where, "max_duration must be > 0"))
    if phase.target_soc is not None:
        if phase.kind is not Mode.CHARGE:
            issues.append(ValidationIssue(where, "target_soc is only allowed on charge phases"))
        elif not 0.0 < phase.target_soc <= 1.0:
            issues.append(
                ValidationIssue(where, f"target_soc must be in (0, 1], got {phase.target_soc}")
            )


def validate(plan: CampaignPlan, scenarios: List[Scenario] = ()) -> List[ValidationIssue]:
    """Check all structural invariants of a plan and its scenarios.

    Returns an empty list when everything is well formed; otherwise a list of
    (location, message) issues. Dynamics-dependent failures (SOC underflow or
    overflow during simulation) are out of scope here.
    """
    issues: List[ValidationIssue] = []
    profile = plan.profile

    if not profile.phases:
        issues.append(ValidationIssue(f"profile.{profile.name}", "profile has no phases"))
    names = profile.phase_names()
    for name in sorted({n for n in names if names.count(n) > 1}):
        issues.append(
            ValidationIssue(f"profile.{profile.name}", f"duplicate phase name '{name}'")
        )
    for phase in profile.phases:
        where = f"profile.{profile.name}.{phase.name}"
        _validate_phase(phase, where, issues)
        if phase.target_soc is not None and phase.target_soc > plan.battery.soc_max:
            issues.append(
                ValidationIssue(
                    where,
                    f"target_soc {phase.target_soc} exceeds battery soc_max "
                    f"{plan.battery.soc_max}",
                )
            )
        if phase.name == INTER_DAY_GAP:
            issues.append(
                ValidationIssue(where, f"phase name '{INTER_DAY_GAP}' is reserved")
            )

    if plan.missions_per_day < 1:
        issues.append(ValidationIssue("schedule", "missions_per_day must be >= 1"))
    if plan.days < 1:
        issues.append(ValidationIssue("schedule", "days must be >= 1"))
    if plan.inter_day_gap is not None and plan.inter_day_gap < 0.0:
        issues.append(ValidationIssue("schedule", "inter_day_gap must be >= 0"))
    if not plan.battery.soc_min <= plan.initial_soc <= plan.battery.soc_max:
        issues.append(
            ValidationIssue(
                "battery",
                f"initial_soc {plan.initial_soc} outside battery bounds "
                f"[{plan.battery.soc_min}, {plan.battery.soc_max}]",
            )
        )

    known = set(names)
    by_name = {p.name: p for p in profile.phases}
    for scenario in scenarios:
        for phase_name, magnitude in scenario.overrides.items():
            where = f"scenario.{scenario.name}.{phase_name}"
            if phase_name not in known:
                issues.append(
                    ValidationIssue(where, f"override targets unknown phase '{phase_name}'")
                )
                continue
            _validate_phase(
                replace(by_name[phase_name], current_magnitude=magnitude), where, issues
            )
    return issues


def apply_scenario(profile: MissionProfile, scenario: Optional[Scenario]) -> MissionProfile:
    """Return a copy of the profile with the scenario's currents substituted.

    The input profile is untouched; empty or None scenarios are the identity.

    Raises:
        KeyError: an override names a phase not present in the profile.
    """
    if scenario is None or not scenario.overrides:
        return profile
    known = set(profile.phase_names())
    for phase_name in scenario.overrides:
        if phase_name not in known:
            raise KeyError(
                f"scenario '{scenario.name}' overrides unknown phase '{phase_name}'"
            )
    phases = tuple(
        replace(p, current_magnitude=scenario.overrides[p.name])
        if p.name in scenario.overrides
        else p
        for p in profile.phases
    )
    return MissionProfile(profile.name, phases)


def expand(plan: CampaignPlan) -> List[Slot]:
    """Flatten a plan into its deterministic execution order.

    For each day, each mission's phases in declared order, missions
    back-to-back; between consecutive days an idle gap slot is inserted
    (omitted when the gap is zero).
    """
    gap = plan.resolved_inter_day_gap()
    slots: List[Slot] = []
    for day in range(1, plan.days + 1):
        for mission in range(1, plan.missions_per_day + 1):
            for phase in plan.profile.phases:
                slots.append(Slot(day=day, mission=mission, phase=phase))
        if day < plan.days and gap > 0.0:
            gap_phase = Phase(
                name=INTER_DAY_GAP,
                kind=Mode.IDLE,
                current_magnitude=0.0,
                max_duration=gap,
            )
            slots.append(Slot(day=day, mission=plan.missions_per_day + 1, phase=gap_phase))
    return slots
