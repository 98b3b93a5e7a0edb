"""Serialization of time series, summaries, and comparison reports.

Floats are written with shortest round-trip precision (up to 17 significant
digits), so downstream plotting reproduces trajectories without quantization
drift, and CSV and JSON encode bit-identical values.
"""

from __future__ import annotations

import dataclasses
import io
import json
from typing import List

from .analysis import CampaignSummary, ComparisonReport
from .engine import TimeSeries

CSV_HEADER = "t_hours,current_a,soc,fec,mode,day,mission"


def timeseries_to_csv(series: TimeSeries) -> str:
    """Render a time series as CSV with full-precision floats."""
    out = io.StringIO()
    out.write(CSV_HEADER + "\n")
    for s in series:
        out.write(
            f"{s.clock!r},{s.current!r},{s.soc!r},{s.fec!r},"
            f"{s.mode.value},{s.day},{s.mission}\n"
        )
    return out.getvalue()


def timeseries_to_json(series: TimeSeries) -> str:
    """Render a time series as JSON records mirroring the CSV columns."""
    records = [
        {
            "t_hours": s.clock,
            "current_a": s.current,
            "soc": s.soc,
            "fec": s.fec,
            "mode": s.mode.value,
            "day": s.day,
            "mission": s.mission,
        }
        for s in series
    ]
    return json.dumps(records, indent=2) + "\n"


def write_timeseries(series: TimeSeries, fmt: str) -> bytes:
    """Encode a time series in the requested format ('csv' or 'json')."""
    if fmt == "csv":
        return timeseries_to_csv(series).encode()
    if fmt == "json":
        return timeseries_to_json(series).encode()
    raise ValueError(f"unknown time-series format {fmt!r} (expected csv or json)")


def summary_to_json(summary: CampaignSummary) -> str:
    """Serialize a campaign summary, including per-mission stats."""
    return json.dumps(dataclasses.asdict(summary), indent=2) + "\n"


def report_to_json(report: ComparisonReport) -> str:
    """Machine-readable comparison report (per-mission detail omitted)."""
    def _summary(s: CampaignSummary) -> dict:
        d = dataclasses.asdict(s)
        d.pop("per_mission")
        return d

    payload = {
        "baseline": _summary(report.baseline),
        "variant": _summary(report.variant),
        "fec_reduction_fraction": report.fec_reduction_fraction,
        "dod_reduction_fraction": report.dod_reduction_fraction,
        "charge_time_saving_minutes": report.charge_time_saving_minutes,
        "soh_note": report.soh_note,
    }
    return json.dumps(payload, indent=2) + "\n"


def report_to_text(report: ComparisonReport) -> str:
    """Human-readable comparison report."""
    b, v = report.baseline, report.variant
    lines: List[str] = [
        f"Scenario comparison: {b.scenario_name} (baseline) vs {v.scenario_name} (variant)",
        "",
        f"{'':24s}{b.scenario_name:>14s}{v.scenario_name:>14s}",
        f"{'total FEC':24s}{b.total_fec:>14.4f}{v.total_fec:>14.4f}",
        f"{'FEC per day':24s}{b.fec_per_day:>14.4f}{v.fec_per_day:>14.4f}",
        f"{'FEC per mission':24s}{b.fec_per_mission:>14.6f}{v.fec_per_mission:>14.6f}",
        f"{'min SOC':24s}{b.min_soc_overall:>14.6f}{v.min_soc_overall:>14.6f}",
        f"{'mean DoD':24s}{b.mean_dod:>14.6f}{v.mean_dod:>14.6f}",
        "",
        f"FEC reduction:  {report.fec_reduction_fraction * 100.0:.4f}%",
        f"DoD reduction:  {report.dod_reduction_fraction * 100.0:.4f}%",
    ]
    if report.charge_time_saving_minutes is not None:
        lines.append(
            f"Charge-time saving per mission: {report.charge_time_saving_minutes:.3f} min"
        )
    lines += ["", report.soh_note, ""]
    return "\n".join(lines)
