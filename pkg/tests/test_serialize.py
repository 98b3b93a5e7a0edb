"""Tests for time-series / report serialization."""

import csv
import io
import json

import pytest

from fecsim import BatteryState, Mode, TimeSeries, run_campaign, summarize, compare
from fecsim.engine import Sample
from fecsim.serialize import (
    CSV_HEADER,
    report_to_json,
    report_to_text,
    summary_to_json,
    timeseries_to_csv,
    timeseries_to_json,
    write_timeseries,
)


def tiny_series():
    return TimeSeries(
        [
            Sample(0.0, 0.0, 0.95, 0.0, Mode.IDLE, 0, 0),
            Sample(0.2, -9.5, 0.5846153846153846, 0.17451923076923078, Mode.DISCHARGE, 1, 1),
            Sample(1 / 3, -9.5, 0.34102564102564097, 0.3044871794871795, Mode.DISCHARGE, 1, 1),
        ]
    )


class TestCsv:
    def test_three_samples_four_lines(self):
        text = timeseries_to_csv(tiny_series())
        lines = text.strip().split("\n")
        assert len(lines) == 4
        assert lines[0] == CSV_HEADER

    def test_empty_series_is_header_only(self):
        assert timeseries_to_csv(TimeSeries([])) == CSV_HEADER + "\n"

    def test_full_precision_round_trip(self):
        # every float round-trips bit-exactly through the CSV text
        series = tiny_series()
        text = timeseries_to_csv(series)
        rows = list(csv.DictReader(io.StringIO(text)))
        for row, sample in zip(rows, series):
            assert float(row["t_hours"]) == sample.clock
            assert float(row["soc"]) == sample.soc
            assert float(row["fec"]) == sample.fec
        assert float(rows[2]["soc"]) == 0.34102564102564097
        assert float(rows[2]["fec"]) == 0.3044871794871795
        assert rows[2]["mode"] == "discharge"
        assert (rows[2]["day"], rows[2]["mission"]) == ("1", "1")


class TestJson:
    def test_records_mirror_csv(self):
        series = tiny_series()
        records = json.loads(timeseries_to_json(series))
        rows = list(csv.DictReader(io.StringIO(timeseries_to_csv(series))))
        assert len(records) == len(rows)
        for record, row in zip(records, rows):
            assert record["t_hours"] == float(row["t_hours"])
            assert record["soc"] == float(row["soc"])
            assert record["fec"] == float(row["fec"])
            assert record["mode"] == row["mode"]

    def test_write_timeseries_dispatch(self):
        series = tiny_series()
        assert write_timeseries(series, "csv").decode() == timeseries_to_csv(series)
        assert write_timeseries(series, "json").decode() == timeseries_to_json(series)
        with pytest.raises(ValueError):
            write_timeseries(series, "xml")


@pytest.fixture(scope="module")
def report(paper_plan, paper_scenarios):
    summaries = []
    for scenario in paper_scenarios:
        series, _, outcomes = run_campaign(paper_plan, scenario)
        summaries.append(
            summarize(series, outcomes, paper_plan, scenario_name=scenario.name)
        )
    return compare(*summaries)


class TestReports:
    def test_summary_json_has_per_mission(self, report):
        payload = json.loads(summary_to_json(report.baseline))
        assert payload["scenario_name"] == "baseline"
        assert len(payload["per_mission"]) == 450
        assert payload["total_fec"] == pytest.approx(274.04, abs=0.01)

    def test_report_json_fields(self, report):
        payload = json.loads(report_to_json(report))
        assert payload["fec_reduction_fraction"] == pytest.approx(1 - 8 / 9.5)
        assert payload["charge_time_saving_minutes"] == pytest.approx(2.885, abs=1e-3)
        assert "per_mission" not in payload["baseline"]

    def test_report_text_mentions_key_numbers(self, report):
        text = report_to_text(report)
        assert "15.789" in text
        assert "274.0385" in text
        assert "230.7692" in text
