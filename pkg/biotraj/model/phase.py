"""Elbow angle phases of a lift and the landmarks found in recordings."""
from typing import Any, Dict, List, Optional, Tuple

import attr

from .constants import PHASES

Window = Tuple[float, float]


def _interval(value: Any) -> Tuple[float, float]:
    low, high = value
    return float(low), float(high)


@attr.s(frozen=True)
class PhaseSpec:
    """Elbow angle regions of a lift, degrees.

    ``high_load`` and ``weakest`` are half open, ``decel`` is closed.

    Args:
        high_load (Tuple[float, float]): Start of the lift, default [0, 40).
        weakest (Tuple[float, float]): Weakest load region, default [40, 90).
        decel (Tuple[float, float]): Slow down to the end, default [90, 150].
        target_peak_angle (float): Elbow angle where the velocity peak
            should occur, default 62.
    """

    high_load = attr.ib(type=Tuple[float, float], default=(0.0, 40.0), converter=_interval)
    weakest = attr.ib(type=Tuple[float, float], default=(40.0, 90.0), converter=_interval)
    decel = attr.ib(type=Tuple[float, float], default=(90.0, 150.0), converter=_interval)
    target_peak_angle = attr.ib(type=float, default=62.0, converter=float)

    def __attrs_post_init__(self) -> None:
        intervals = (self.high_load, self.weakest, self.decel)
        for low, high in intervals:
            if not low < high:
                raise ValueError("phase interval [{}, {}] is empty".format(low, high))
        if self.high_load[1] != self.weakest[0] or self.weakest[1] != self.decel[0]:
            raise ValueError("phase intervals must be contiguous")
        if not self.weakest[0] <= self.target_peak_angle < self.weakest[1]:
            raise ValueError(
                "target_peak_angle {} outside weakest region {}".format(
                    self.target_peak_angle, self.weakest
                )
            )

    def interval(self, phase: str) -> Tuple[float, float]:
        """Get the angle interval of a phase by name."""
        if phase not in PHASES:
            raise ValueError("unknown phase {}".format(phase))
        return getattr(self, phase)  # type: ignore


@attr.s(frozen=True)
class PhaseIntervals:
    """Time windows spent in each phase, s.

    Args:
        high_load (List[Tuple[float, float]]): Windows in the high load phase.
        weakest (List[Tuple[float, float]]): Windows in the weakest region.
        decel (List[Tuple[float, float]]): Windows in the slow down phase.
    """

    high_load = attr.ib(type=List[Window], factory=list)
    weakest = attr.ib(type=List[Window], factory=list)
    decel = attr.ib(type=List[Window], factory=list)

    def windows(self, phase: str) -> List[Window]:
        return getattr(self, phase)  # type: ignore

    def total_time(self, phase: str) -> float:
        """Time spent in a phase, s."""
        return sum(end - start for start, end in self.windows(phase))

    def as_dict(self) -> Dict[str, List[List[float]]]:
        return {phase: [[start, end] for start, end in self.windows(phase)] for phase in PHASES}


@attr.s(frozen=True)
class FeaturePoints:
    """Landmarks of a lift.

    Args:
        velocity_peak (Tuple[float, float]): Time (s) and elbow angle (deg) of
            the elbow speed maximum.
        peak_speed (float): Elbow speed at the peak, deg/s.
        accel_zero_crossing (float): Time where the elbow acceleration turns
            from speeding up to slowing down, s.
        peak_phase (str): Phase containing the velocity peak.
        emg_peaks (Dict[str, List[Tuple[float, float]]]): Envelope peaks
            (time, mV) per channel.
        emg_lag (Dict[str, float]): Time of the highest envelope peak minus
            accel_zero_crossing, per channel.
    """

    velocity_peak = attr.ib(type=Tuple[float, float])
    peak_speed = attr.ib(type=float)
    accel_zero_crossing = attr.ib(type=Optional[float], default=None)
    peak_phase = attr.ib(type=Optional[str], default=None)
    emg_peaks = attr.ib(type=Dict[str, List[Tuple[float, float]]], factory=dict)
    emg_lag = attr.ib(type=Dict[str, Optional[float]], factory=dict)
