"""YAML configuration parsing and serialization.

The config is user-facing: capacities in Ah, currents in A, durations in
minutes. Units convert to the internal hour-based model exactly once at the
parse boundary. Parsing is strict: unknown keys anywhere are rejected so
typos fail loudly instead of silently falling back to defaults.

Schema::

    battery:
      nominal_capacity_ah: 5.2   # required, > 0
      soh: 1.0                   # optional, (0, 1]
      initial_soc: 0.95          # optional
      soc_min: 0.0               # optional
      soc_max: 1.0               # optional
    profile:
      name: inspection
      phases:
        - name: flight
          kind: discharge        # discharge | idle | charge
          current_a: 9.5         # magnitude, >= 0
          max_duration_min: 20
          target_soc: 0.95       # optional, charge phases only
    schedule:
      missions_per_day: 15
      days: 30
      inter_day_gap_min: 765     # optional; default = rest of a 24 h day
    scenarios:                   # optional
      - name: ceiling
        overrides: {flight: 8.0}
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

import yaml

from .battery import BatteryParams, Mode
from .mission import CampaignPlan, MissionProfile, Phase, Scenario

MINUTES_PER_HOUR = 60.0


class ConfigError(Exception):
    """Configuration could not be parsed; message carries the field path."""


def _require_mapping(node, path: str) -> dict:
    if not isinstance(node, dict):
        raise ConfigError(f"{path}: expected a mapping, got {type(node).__name__}")
    return node


def _reject_unknown(node: dict, allowed: set, path: str) -> None:
    unknown = sorted(set(node) - allowed)
    if unknown:
        raise ConfigError(f"{path}: unknown key(s) {', '.join(map(repr, unknown))}")


def _number(node: dict, key: str, path: str, default=None, required=False) -> Optional[float]:
    if key not in node:
        if required:
            raise ConfigError(f"{path}: missing required key '{key}'")
        return default
    value = node[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{path}.{key}: expected a number, got {value!r}")
    return float(value)


def _integer(node: dict, key: str, path: str) -> int:
    if key not in node:
        raise ConfigError(f"{path}: missing required key '{key}'")
    value = node[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{path}.{key}: expected an integer, got {value!r}")
    return value


def _string(node: dict, key: str, path: str) -> str:
    if key not in node:
        raise ConfigError(f"{path}: missing required key '{key}'")
    value = node[key]
    if not isinstance(value, str):
        raise ConfigError(f"{path}.{key}: expected a string, got {value!r}")
    return value


def _parse_phase(node, index: int) -> Phase:
    path = f"profile.phases[{index}]"
    node = _require_mapping(node, path)
    _reject_unknown(node, {"name", "kind", "current_a", "max_duration_min", "target_soc"}, path)
    kind_raw = _string(node, "kind", path)
    try:
        kind = Mode(kind_raw)
    except ValueError:
        raise ConfigError(
            f"{path}.kind: expected one of discharge/idle/charge, got {kind_raw!r}"
        ) from None
    return Phase(
        name=_string(node, "name", path),
        kind=kind,
        current_magnitude=_number(node, "current_a", path, required=True),
        max_duration=_number(node, "max_duration_min", path, required=True) / MINUTES_PER_HOUR,
        target_soc=_number(node, "target_soc", path),
    )


def parse_config(text: str) -> Tuple[CampaignPlan, List[Scenario]]:
    """Parse a YAML config document into a plan plus its scenarios.

    Raises:
        ConfigError: syntax errors (with line/column from the YAML parser)
            or semantic errors (with the offending field path).
    """
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f" at line {mark.line + 1}, column {mark.column + 1}" if mark else ""
        raise ConfigError(f"YAML syntax error{where}: {exc}") from exc
    doc = _require_mapping(doc, "document")
    _reject_unknown(doc, {"battery", "profile", "schedule", "scenarios"}, "document")

    if "battery" not in doc:
        raise ConfigError("document: missing required section 'battery'")
    battery_node = _require_mapping(doc["battery"], "battery")
    _reject_unknown(
        battery_node,
        {"nominal_capacity_ah", "soh", "initial_soc", "soc_min", "soc_max"},
        "battery",
    )
    try:
        battery = BatteryParams(
            nominal_capacity=_number(battery_node, "nominal_capacity_ah", "battery", required=True),
            soh=_number(battery_node, "soh", "battery", default=1.0),
            soc_min=_number(battery_node, "soc_min", "battery", default=0.0),
            soc_max=_number(battery_node, "soc_max", "battery", default=1.0),
        )
    except ValueError as exc:
        raise ConfigError(f"battery: {exc}") from exc
    initial_soc = _number(battery_node, "initial_soc", "battery", default=0.95)

    if "profile" not in doc:
        raise ConfigError("document: missing required section 'profile'")
    profile_node = _require_mapping(doc["profile"], "profile")
    _reject_unknown(profile_node, {"name", "phases"}, "profile")
    phases_node = profile_node.get("phases")
    if not isinstance(phases_node, list) or not phases_node:
        raise ConfigError("profile.phases: expected a non-empty list")
    profile = MissionProfile(
        name=_string(profile_node, "name", "profile"),
        phases=[_parse_phase(p, i) for i, p in enumerate(phases_node)],
    )

    if "schedule" not in doc:
        raise ConfigError("document: missing required section 'schedule'")
    schedule_node = _require_mapping(doc["schedule"], "schedule")
    _reject_unknown(
        schedule_node, {"missions_per_day", "days", "inter_day_gap_min"}, "schedule"
    )
    gap_min = _number(schedule_node, "inter_day_gap_min", "schedule")
    plan = CampaignPlan(
        battery=battery,
        profile=profile,
        missions_per_day=_integer(schedule_node, "missions_per_day", "schedule"),
        days=_integer(schedule_node, "days", "schedule"),
        initial_soc=initial_soc,
        inter_day_gap=None if gap_min is None else gap_min / MINUTES_PER_HOUR,
    )

    scenarios: List[Scenario] = []
    scenarios_node = doc.get("scenarios", [])
    if not isinstance(scenarios_node, list):
        raise ConfigError("scenarios: expected a list")
    for i, node in enumerate(scenarios_node):
        path = f"scenarios[{i}]"
        node = _require_mapping(node, path)
        _reject_unknown(node, {"name", "overrides"}, path)
        overrides_node = node.get("overrides", {})
        overrides_node = _require_mapping(overrides_node, f"{path}.overrides")
        overrides: Dict[str, float] = {}
        for phase_name, magnitude in overrides_node.items():
            if isinstance(magnitude, bool) or not isinstance(magnitude, (int, float)):
                raise ConfigError(
                    f"{path}.overrides.{phase_name}: expected a number, got {magnitude!r}"
                )
            overrides[str(phase_name)] = float(magnitude)
        scenarios.append(Scenario(name=_string(node, "name", path), overrides=overrides))
    return plan, scenarios


def serialize_config(plan: CampaignPlan, scenarios: List[Scenario]) -> str:
    """Render a plan back to the YAML schema accepted by `parse_config`.

    parse -> serialize -> parse is a fixed point on valid configs.
    """
    doc: Dict[str, object] = {
        "battery": {
            "nominal_capacity_ah": plan.battery.nominal_capacity,
            "soh": plan.battery.soh,
            "initial_soc": plan.initial_soc,
            "soc_min": plan.battery.soc_min,
            "soc_max": plan.battery.soc_max,
        },
        "profile": {
            "name": plan.profile.name,
            "phases": [
                {
                    "name": p.name,
                    "kind": p.kind.value,
                    "current_a": p.current_magnitude,
                    "max_duration_min": p.max_duration * MINUTES_PER_HOUR,
                    **({"target_soc": p.target_soc} if p.target_soc is not None else {}),
                }
                for p in plan.profile.phases
            ],
        },
        "schedule": {
            "missions_per_day": plan.missions_per_day,
            "days": plan.days,
            **(
                {"inter_day_gap_min": plan.inter_day_gap * MINUTES_PER_HOUR}
                if plan.inter_day_gap is not None
                else {}
            ),
        },
    }
    if scenarios:
        doc["scenarios"] = [
            {"name": s.name, "overrides": dict(s.overrides)} for s in scenarios
        ]
    return yaml.safe_dump(doc, sort_keys=False)
