"""Tests for config parsing, defaults, strictness, and round-tripping."""

import pytest

from fecsim import ConfigError, Mode, parse_config, serialize_config

MINIMAL = """
battery:
  nominal_capacity_ah: 5.2
profile:
  name: hop
  phases:
    - {name: flight, kind: discharge, current_a: 9.5, max_duration_min: 20}
schedule:
  missions_per_day: 1
  days: 1
"""


class TestParse:
    def test_paper_config(self, paper_config_text):
        plan, scenarios = parse_config(paper_config_text)
        assert plan.battery.nominal_capacity == 5.2
        assert plan.initial_soc == 0.95
        assert plan.missions_per_day == 15
        assert plan.days == 30
        flight, rest, recharge = plan.profile.phases
        assert (flight.kind, flight.current_magnitude) == (Mode.DISCHARGE, 9.5)
        assert flight.max_duration == pytest.approx(1 / 3)
        assert rest.kind is Mode.IDLE
        assert rest.max_duration == pytest.approx(1 / 12)
        assert (recharge.current_magnitude, recharge.target_soc) == (10.4, 0.95)
        assert [s.name for s in scenarios] == ["baseline", "ceiling"]
        assert scenarios[1].overrides == {"flight": 8.0}

    def test_defaults_applied(self):
        plan, scenarios = parse_config(MINIMAL)
        assert plan.battery.soh == 1.0
        assert plan.battery.soc_min == 0.0
        assert plan.battery.soc_max == 1.0
        assert plan.initial_soc == 0.95
        assert plan.inter_day_gap is None
        assert scenarios == []

    def test_missing_battery_section(self):
        text = MINIMAL.replace("battery:", "batteryx:")
        with pytest.raises(ConfigError, match="battery"):
            parse_config(text)

    def test_unknown_key_rejected(self):
        with pytest.raises(ConfigError, match="capacity_ah"):
            parse_config(MINIMAL.replace("nominal_capacity_ah", "capacity_ah"))

    def test_bad_target_soc(self):
        text = MINIMAL.replace(
            "max_duration_min: 20}", "max_duration_min: 20, target_soc: 1.2}"
        )
        plan, _ = parse_config(text)
        from fecsim import validate

        assert any("target_soc" in i.message for i in validate(plan, []))

    def test_bad_battery_params_fail_at_parse(self):
        with pytest.raises(ConfigError, match="nominal_capacity"):
            parse_config(MINIMAL.replace("5.2", "-1"))

    def test_syntax_error_reports_position(self):
        with pytest.raises(ConfigError, match=r"line \d+"):
            parse_config("battery: [unclosed")

    def test_bad_kind(self):
        with pytest.raises(ConfigError, match="discharge/idle/charge"):
            parse_config(MINIMAL.replace("kind: discharge", "kind: cruise"))

    def test_non_numeric_current(self):
        with pytest.raises(ConfigError, match="current_a"):
            parse_config(MINIMAL.replace("current_a: 9.5", "current_a: fast"))

    def test_gap_minutes_converted(self):
        text = MINIMAL + "  inter_day_gap_min: 90\n"
        plan, _ = parse_config(text)
        assert plan.inter_day_gap == pytest.approx(1.5)


class TestRoundTrip:
    def test_parse_serialize_parse_fixed_point(self, paper_config_text):
        plan1, scenarios1 = parse_config(paper_config_text)
        text2 = serialize_config(plan1, scenarios1)
        plan2, scenarios2 = parse_config(text2)
        assert plan2 == plan1
        assert scenarios2 == scenarios1
        # second round trip is literally identical text
        assert serialize_config(plan2, scenarios2) == text2

    def test_round_trip_with_gap(self):
        plan1, scenarios1 = parse_config(MINIMAL + "  inter_day_gap_min: 765\n")
        plan2, scenarios2 = parse_config(serialize_config(plan1, scenarios1))
        assert plan2 == plan1
