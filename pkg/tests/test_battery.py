"""Unit tests for the core SOC / FEC segment math."""

import math

import pytest

from fecsim import (
    BatteryParams,
    BatteryState,
    CurrentSegment,
    Mode,
    SocOverflowError,
    SocUnderflowError,
    apply_segment,
    delta_fec,
    fec_closed_form,
    mean_c_rate,
    soc_delta,
)


class TestParamsAndTypes:
    def test_params_defaults(self):
        p = BatteryParams(nominal_capacity=5.2)
        assert p.soh == 1.0
        assert p.soc_min == 0.0
        assert p.soc_max == 1.0

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"nominal_capacity": 0.0},
            {"nominal_capacity": -1.0},
            {"nominal_capacity": 5.2, "soh": 0.0},
            {"nominal_capacity": 5.2, "soh": 1.5},
            {"nominal_capacity": 5.2, "soc_min": 0.5, "soc_max": 0.5},
            {"nominal_capacity": 5.2, "soc_min": -0.1},
            {"nominal_capacity": 5.2, "soc_max": 1.1},
        ],
    )
    def test_params_invariants(self, kwargs):
        with pytest.raises(ValueError):
            BatteryParams(**kwargs)

    def test_segment_duration_must_be_positive(self):
        with pytest.raises(ValueError):
            CurrentSegment(current=1.0, duration=0.0)

    @pytest.mark.parametrize(
        "current,mode",
        [(-9.5, Mode.DISCHARGE), (0.0, Mode.IDLE), (10.4, Mode.CHARGE)],
    )
    def test_segment_mode_from_sign(self, current, mode):
        assert CurrentSegment(current, 1.0).mode is mode


class TestMeanCRate:
    def test_flight_current(self, pack):
        # oracle: 9.5 / 5.2
        got = mean_c_rate(CurrentSegment(-9.5, 1 / 3), pack)
        assert got == pytest.approx(1.826923, abs=1e-6)
        assert got == 9.5 / 5.2

    def test_idle_is_zero(self, pack):
        assert mean_c_rate(CurrentSegment(0.0, 2.0), pack) == 0.0

    def test_two_c_charge(self, pack):
        assert mean_c_rate(CurrentSegment(10.4, 0.25), pack) == pytest.approx(2.0)

    def test_duration_independent(self, pack):
        a = mean_c_rate(CurrentSegment(-4.0, 0.1), pack)
        b = mean_c_rate(CurrentSegment(-4.0, 7.0), pack)
        assert a == b


class TestDeltaFec:
    def test_flight_segment(self, pack):
        # oracle: 0.5 * (9.5/5.2) * (1/3)
        got = delta_fec(CurrentSegment(-9.5, 1 / 3), pack)
        assert got == pytest.approx(0.3044872, abs=1e-7)
        assert got == 0.5 * (9.5 / 5.2) * (1 / 3)

    def test_idle_contributes_nothing(self, pack):
        assert delta_fec(CurrentSegment(0.0, 123.0), pack) == 0.0

    def test_full_cycle_is_unit_fec(self, pack):
        # one full 1C discharge plus one full 1C recharge
        total = delta_fec(CurrentSegment(-5.2, 1.0), pack) + delta_fec(
            CurrentSegment(5.2, 1.0), pack
        )
        assert total == pytest.approx(1.0, abs=1e-15)


class TestApplySegment:
    def test_paper_flight_without_ceiling(self, pack):
        state = BatteryState(clock=0.0, soc=0.95, fec=0.0)
        out = apply_segment(state, CurrentSegment(-9.5, 1 / 3), pack)
        assert out.soc == pytest.approx(0.3410256, abs=1e-7)
        assert out.fec == pytest.approx(0.3044872, abs=1e-7)
        assert out.clock == pytest.approx(1 / 3)
        assert out.mode is Mode.DISCHARGE

    def test_paper_flight_with_ceiling(self, pack):
        state = BatteryState(clock=0.0, soc=0.95, fec=0.0)
        out = apply_segment(state, CurrentSegment(-8.0, 1 / 3), pack)
        assert out.soc == pytest.approx(0.4371795, abs=1e-7)

    def test_idle_advances_only_clock(self, pack):
        state = BatteryState(clock=1.0, soc=0.42, fec=0.7, mode=Mode.DISCHARGE)
        out = apply_segment(state, CurrentSegment(0.0, 5 / 60), pack)
        assert out.soc == state.soc
        assert out.fec == state.fec
        assert out.clock == pytest.approx(1.0 + 5 / 60)
        assert out.mode is Mode.IDLE

    def test_input_state_untouched(self, pack):
        state = BatteryState(clock=0.0, soc=0.95, fec=0.0)
        apply_segment(state, CurrentSegment(-9.5, 0.1), pack)
        assert state.soc == 0.95 and state.fec == 0.0

    def test_underflow_reports_depletion_time(self, pack):
        state = BatteryState(clock=2.0, soc=0.1, fec=0.0)
        with pytest.raises(SocUnderflowError) as exc_info:
            apply_segment(state, CurrentSegment(-5.2, 1.0), pack)
        # 0.1 SOC at 1C lasts 0.1 h
        assert exc_info.value.crossing_clock == pytest.approx(2.1, abs=1e-12)
        assert exc_info.value.bound == 0.0

    def test_overflow_reports_crossing_time(self, pack):
        state = BatteryState(clock=0.0, soc=0.9, fec=0.0)
        with pytest.raises(SocOverflowError) as exc_info:
            apply_segment(state, CurrentSegment(10.4, 0.5), pack)
        # 0.1 SOC headroom at 2C takes 0.05 h
        assert exc_info.value.crossing_clock == pytest.approx(0.05, abs=1e-12)
        assert exc_info.value.bound == 1.0

    def test_soh_scales_soc_not_fec(self):
        params = BatteryParams(nominal_capacity=5.2, soh=0.8)
        state = BatteryState(clock=0.0, soc=0.95, fec=0.0)
        out = apply_segment(state, CurrentSegment(-9.5, 0.1), params)
        assert out.soc == pytest.approx(0.95 - 9.5 * 0.1 / (5.2 * 0.8))
        # FEC normalizes by nominal capacity only
        assert out.fec == pytest.approx(9.5 * 0.1 / (2 * 5.2))

    def test_soc_delta_linearity(self, pack):
        seg = CurrentSegment(-3.7, 0.42)
        assert soc_delta(seg, pack) == -3.7 * 0.42 / 5.2


class TestFecClosedForm:
    def test_one_mission(self, pack):
        # oracle: (9.5/3 + 10.4 * 0.3044872) / (2 * 5.2)
        mission = [
            CurrentSegment(-9.5, 1 / 3),
            CurrentSegment(0.0, 1 / 12),
            CurrentSegment(10.4, 0.3044872),
        ]
        expected = (9.5 / 3 + 10.4 * 0.3044872) / (2 * 5.2)
        got = fec_closed_form(mission, pack)
        assert got == pytest.approx(expected, rel=1e-15)
        assert got == pytest.approx(0.6089744, abs=1e-6)

    def test_all_idle(self, pack):
        assert fec_closed_form([CurrentSegment(0.0, 1.0)] * 3, pack) == 0.0

    def test_fifteen_missions_daily_total(self, pack):
        charge_time = 0.95 - (0.95 - 9.5 / (3 * 5.2))  # delta SOC restored
        charge_hours = charge_time * 5.2 / 10.4
        mission = [
            CurrentSegment(-9.5, 1 / 3),
            CurrentSegment(0.0, 1 / 12),
            CurrentSegment(10.4, charge_hours),
        ]
        assert fec_closed_form(mission * 15, pack) == pytest.approx(9.134615, abs=1e-5)

    def test_empty_list_rejected(self, pack):
        with pytest.raises(ValueError):
            fec_closed_form([], pack)

    def test_matches_per_segment_accumulation(self, pack):
        segments = [
            CurrentSegment(c, d)
            for c, d in [(-9.5, 0.21), (0.0, 0.05), (10.4, 0.19), (-3.3, 1.7)]
        ]
        acc = sum(delta_fec(s, pack) for s in segments)
        assert math.isclose(acc, fec_closed_form(segments, pack), rel_tol=1e-12)
