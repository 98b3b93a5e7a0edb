"""Battery parameters, state, and the SOC / full-equivalent-cycle math.

All quantities are double precision. Canonical units: hours for time,
amperes for current, ampere-hours for capacity. Current sign convention:
positive = charging, negative = discharging, zero = idle.

SOC is tracked by coulomb counting; cycling stress by full equivalent
cycles (FEC), where one FEC corresponds to a total absolute charge
throughput of twice the nominal capacity (one full discharge plus one
full recharge).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable

# Slack on SOC bound checks so event-terminated charge phases that land on
# the bound by construction do not trip the overflow check by one ulp.
_SOC_BOUND_TOL = 1e-12


class Mode(str, Enum):
    """Battery operating mode, derived from the sign of the current."""

    DISCHARGE = "discharge"
    IDLE = "idle"
    CHARGE = "charge"

    @staticmethod
    def from_current(current: float) -> "Mode":
        if current > 0.0:
            return Mode.CHARGE
        if current < 0.0:
            return Mode.DISCHARGE
        return Mode.IDLE


class SocBoundsError(Exception):
    """SOC left its allowed band during a constant-current segment.

    Attributes:
        crossing_clock: absolute clock (hours) at which the bound is crossed,
            solved exactly from the linear coulomb law.
        bound: the SOC bound that was crossed.
    """

    def __init__(self, message: str, crossing_clock: float, bound: float):
        super().__init__(message)
        self.crossing_clock = crossing_clock
        self.bound = bound


class SocUnderflowError(SocBoundsError):
    """Battery depleted below soc_min (e.g. exhausted mid-flight)."""


class SocOverflowError(SocBoundsError):
    """Battery charged above soc_max (overcharge on an untargeted charge)."""


@dataclass(frozen=True)
class BatteryParams:
    """Immutable battery configuration.

    Attributes:
        nominal_capacity: rated capacity in ampere-hours (> 0).
        soh: state of health, dimensionless in (0, 1]. Constant for a run.
        soc_min: lower SOC bound (fraction, default 0.0).
        soc_max: upper SOC bound (fraction, default 1.0).
    """

    nominal_capacity: float
    soh: float = 1.0
    soc_min: float = 0.0
    soc_max: float = 1.0

    def __post_init__(self) -> None:
        if not self.nominal_capacity > 0.0:
            raise ValueError(f"nominal_capacity must be > 0, got {self.nominal_capacity}")
        if not 0.0 < self.soh <= 1.0:
            raise ValueError(f"soh must be in (0, 1], got {self.soh}")
        if not 0.0 <= self.soc_min < self.soc_max <= 1.0:
            raise ValueError(
                f"require 0 <= soc_min < soc_max <= 1, got [{self.soc_min}, {self.soc_max}]"
            )


@dataclass(frozen=True)
class BatteryState:
    """Instantaneous battery state along a simulation.

    Attributes:
        clock: elapsed time in hours since campaign start.
        soc: state of charge, fraction of nominal capacity.
        fec: accumulated full equivalent cycles (non-decreasing).
        mode: current operating mode.
    """

    clock: float = 0.0
    soc: float = 0.95
    fec: float = 0.0
    mode: Mode = Mode.IDLE


@dataclass(frozen=True)
class CurrentSegment:
    """One constant-current interval.

    Attributes:
        current: signed amperes (positive = charging, negative = discharging).
        duration: span in hours, strictly positive.
    """

    current: float
    duration: float

    def __post_init__(self) -> None:
        if not self.duration > 0.0:
            raise ValueError(f"segment duration must be > 0, got {self.duration}")

    @property
    def mode(self) -> Mode:
        return Mode.from_current(self.current)


def mean_c_rate(segment: CurrentSegment, params: BatteryParams) -> float:
    """Mean C-rate over a constant-current segment: |i| / C_nom.

    For constant current the time average over the interval equals the
    instantaneous value, so no integration is needed.
    """
    return abs(segment.current) / params.nominal_capacity


def delta_fec(segment: CurrentSegment, params: BatteryParams) -> float:
    """FEC increment for one segment: 1/2 * C_rate * duration.

    Always >= 0; zero iff the segment carries no current.
    """
    return 0.5 * mean_c_rate(segment, params) * segment.duration


def soc_delta(segment: CurrentSegment, params: BatteryParams) -> float:
    """SOC change over a segment by coulomb counting: i*d / (C_nom*soh)."""
    return segment.current * segment.duration / (params.nominal_capacity * params.soh)


def apply_segment(
    state: BatteryState, segment: CurrentSegment, params: BatteryParams
) -> BatteryState:
    """Advance the battery state across one constant-current segment.

    SOC follows the linear coulomb law, FEC accrues half the normalized
    absolute throughput, the clock advances by the segment duration, and the
    mode is set from the current's sign.

    Raises:
        SocUnderflowError: discharge would cross soc_min; carries the exact
            depletion clock.
        SocOverflowError: charge would cross soc_max; carries the exact
            crossing clock.
    """
    new_soc = state.soc + soc_delta(segment, params)
    if new_soc < params.soc_min - _SOC_BOUND_TOL:
        crossing = state.clock + (params.soc_min - state.soc) * (
            params.nominal_capacity * params.soh
        ) / segment.current
        raise SocUnderflowError(
            f"SOC underflow: would reach {new_soc:.6f} < soc_min={params.soc_min} "
            f"(depleted at t={crossing:.6f} h)",
            crossing_clock=crossing,
            bound=params.soc_min,
        )
    if new_soc > params.soc_max + _SOC_BOUND_TOL:
        crossing = state.clock + (params.soc_max - state.soc) * (
            params.nominal_capacity * params.soh
        ) / segment.current
        raise SocOverflowError(
            f"SOC overflow: would reach {new_soc:.6f} > soc_max={params.soc_max} "
            f"(crossed at t={crossing:.6f} h)",
            crossing_clock=crossing,
            bound=params.soc_max,
        )
    return replace(
        state,
        clock=state.clock + segment.duration,
        soc=new_soc,
        fec=state.fec + delta_fec(segment, params),
        mode=segment.mode,
    )


def fec_closed_form(segments: Iterable[CurrentSegment], params: BatteryParams) -> float:
    """Total FEC of a piecewise-constant profile from the throughput integral.

    Computes sum(|i_k| * d_k) / (2 * C_nom). Matches per-segment accumulation
    via ``delta_fec`` up to floating-point summation order; both views are
    kept so tests can assert their agreement.
    """
    segments = list(segments)
    if not segments:
        raise ValueError("fec_closed_form requires a non-empty segment list")
    throughput = sum(abs(s.current) * s.duration for s in segments)
    return throughput / (2.0 * params.nominal_capacity)
