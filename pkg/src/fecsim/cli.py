"""Command-line interface.

Subcommands:
    validate  <config>                       check a config, list issues
    simulate  <config> --scenario NAME       run one scenario, write outputs
    compare   <config> --baseline A --variant B   A-vs-B report

Exit statuses: 0 success, 1 validation failure, 2 simulation error
(SOC bound violation), 3 I/O or usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from .analysis import compare, summarize
from .config import ConfigError, parse_config
from .engine import PlanInvalidError, SimulationError, run_campaign
from .mission import Scenario, validate
from .serialize import (
    report_to_json,
    report_to_text,
    summary_to_json,
    write_timeseries,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_SIMULATION = 2
EXIT_USAGE = 3

SECONDS_PER_HOUR = 3600.0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fecsim",
        description=(
            "Deterministic battery-lifetime mission simulator: coulomb-counted "
            "SOC and full-equivalent-cycle stress for piecewise-constant UAV "
            "load profiles, with scenario comparison."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="validate a config file")
    p_validate.add_argument("config", type=Path)

    p_sim = sub.add_parser("simulate", help="run one scenario and write outputs")
    p_sim.add_argument("config", type=Path)
    p_sim.add_argument("--scenario", help="scenario name (omit to run the profile as-is)")
    p_sim.add_argument("--out", type=Path, required=True, help="output directory")
    p_sim.add_argument(
        "--sample-interval-s",
        type=float,
        default=60.0,
        help="time-series sampling interval in seconds (default 60)",
    )
    p_sim.add_argument("--format", choices=("csv", "json"), default="csv")

    p_cmp = sub.add_parser("compare", help="compare two scenarios")
    p_cmp.add_argument("config", type=Path)
    p_cmp.add_argument("--baseline", required=True, help="baseline scenario name")
    p_cmp.add_argument("--variant", required=True, help="variant scenario name")
    p_cmp.add_argument("--out", type=Path, required=True, help="output directory")
    p_cmp.add_argument(
        "--sample-interval-s", type=float, default=60.0, help="sampling interval in seconds"
    )
    return parser


def _load(config_path: Path):
    try:
        text = config_path.read_text()
    except OSError as exc:
        print(f"error: cannot read {config_path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from exc
    try:
        return parse_config(text)
    except ConfigError as exc:
        print(f"error: {config_path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_VALIDATION) from exc


def _pick_scenario(scenarios: List[Scenario], name: Optional[str]) -> Optional[Scenario]:
    if name is None:
        return None
    for scenario in scenarios:
        if scenario.name == name:
            return scenario
    available = ", ".join(s.name for s in scenarios) or "(none defined)"
    print(
        f"error: unknown scenario '{name}'; available scenarios: {available}",
        file=sys.stderr,
    )
    raise SystemExit(EXIT_USAGE)


def _write(path: Path, data) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        if isinstance(data, bytes):
            path.write_bytes(data)
        else:
            path.write_text(data)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from exc


def _cmd_validate(args) -> int:
    plan, scenarios = _load(args.config)
    issues = validate(plan, scenarios)
    if issues:
        for issue in issues:
            print(issue)
        return EXIT_VALIDATION
    print(f"{args.config}: OK ({len(scenarios)} scenario(s))")
    return EXIT_OK


def _run_scenario(plan, scenarios, name: Optional[str], sample_interval_s: float):
    scenario = _pick_scenario(scenarios, name)
    try:
        series, final_state, outcomes = run_campaign(
            plan, scenario, sample_interval=sample_interval_s / SECONDS_PER_HOUR
        )
    except PlanInvalidError as exc:
        for issue in exc.issues:
            print(issue, file=sys.stderr)
        raise SystemExit(EXIT_VALIDATION) from exc
    except SimulationError as exc:
        print(f"error: simulation failed: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_SIMULATION) from exc
    label = name if name is not None else plan.profile.name
    summary = summarize(series, outcomes, plan, scenario_name=label)
    return series, final_state, outcomes, summary


def _cmd_simulate(args) -> int:
    plan, scenarios = _load(args.config)
    series, _, _, summary = _run_scenario(
        plan, scenarios, args.scenario, args.sample_interval_s
    )
    label = summary.scenario_name
    _write(args.out / f"{label}_timeseries.{args.format}", write_timeseries(series, args.format))
    _write(args.out / f"{label}_summary.json", summary_to_json(summary))
    print(
        f"{label}: total FEC {summary.total_fec:.4f}, "
        f"FEC/day {summary.fec_per_day:.4f}, min SOC {summary.min_soc_overall:.4f}"
    )
    return EXIT_OK


def _cmd_compare(args) -> int:
    plan, scenarios = _load(args.config)
    _, _, _, base_summary = _run_scenario(
        plan, scenarios, args.baseline, args.sample_interval_s
    )
    _, _, _, var_summary = _run_scenario(
        plan, scenarios, args.variant, args.sample_interval_s
    )
    report = compare(base_summary, var_summary)
    text = report_to_text(report)
    _write(args.out / "comparison.json", report_to_json(report))
    _write(args.out / "comparison.txt", text)
    print(text, end="")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; remap to the documented status.
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "validate":
            return _cmd_validate(args)
        if args.command == "simulate":
            return _cmd_simulate(args)
        return _cmd_compare(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
