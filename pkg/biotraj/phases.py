"""Elbow angle phases of a lift.

A lift goes through three elbow regions: a high load start, the weakest
load region where the velocity peak belongs, and a slow down to the end.
"""
import logging
import math
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import defaults, quintic, signals
from .error import NoPeakFoundError
from .model import (
    EmgRecording,
    FeaturePoints,
    MotionRecording,
    PhaseIntervals,
    PhaseSpec,
    SampledTrajectory,
    TimeSeries,
)
from .model.constants import ELBOW, PHASES

_LOGGER = logging.getLogger(__name__)

RAMP_START_FRACTION = 0.05
"""Share of the peak speed marking the start of the movement."""

FLAT_TOLERANCE = 1e-6
"""Relative speed range under which a recording has no velocity peak."""


def phase_of(angle_deg: float, spec: PhaseSpec) -> Optional[str]:
    """Name of the phase containing an elbow angle, None outside all phases."""
    for phase in PHASES[:-1]:
        low, high = spec.interval(phase)
        if low <= angle_deg < high:
            return phase
    low, high = spec.decel
    return PHASES[-1] if low <= angle_deg <= high else None


def _level(angle: float, spec: PhaseSpec) -> int:
    phase = phase_of(angle, spec)
    if phase is not None:
        return PHASES.index(phase)
    return -1 if angle < spec.high_load[0] else len(PHASES)


def _crossing_time(
    t: np.ndarray, angle: np.ndarray, edge: float, first: int, last: int, rising: bool
) -> float:
    """Interpolated time where *angle* crosses *edge* between samples *first*
    and *last*, the crossing closest to *last* wins."""
    for j in range(last - 1, first - 1, -1):
        before = angle[j] < edge if rising else angle[j] >= edge
        if before:
            a0, a1 = angle[j], angle[j + 1]
            if a1 == a0:
                return float(t[j + 1])
            ratio = min(max((edge - a0) / (a1 - a0), 0.0), 1.0)
            return float(t[j] + ratio * (t[j + 1] - t[j]))
    return float(t[last])


def segment_by_elbow_angle(
    elbow: TimeSeries, spec: PhaseSpec, hysteresis_deg: float = defaults.HYSTERESIS_DEG
) -> PhaseIntervals:
    """Split a recording in time windows per phase.

    A boundary counts as crossed once the angle moves half the hysteresis
    past it; the reported crossing time is the linear interpolation of the
    boundary itself.

    Args:
        elbow (TimeSeries): Elbow angle, degrees, preferably filtered.
        spec (PhaseSpec): Phase regions.
        hysteresis_deg (float): Width of the hysteresis band, degrees.
    """
    windows: Dict[str, List[Tuple[float, float]]] = {phase: [] for phase in PHASES}
    if len(elbow) == 0:
        return PhaseIntervals(**windows)

    t, angle = elbow.t, elbow.v
    edges = (spec.high_load[0], spec.weakest[0], spec.decel[0], spec.decel[1])
    half = hysteresis_deg / 2.0
    level = _level(float(angle[0]), spec)
    start_time, start_index = float(t[0]), 0

    for index in range(1, len(elbow)):
        value = angle[index]
        while True:
            if level < len(PHASES):
                edge = edges[level + 1]
                up = value > edge + half if level == len(PHASES) - 1 else value >= edge + half
            else:
                up = False
            down = level >= 0 and value < edges[level] - half
            if not (up or down):
                break
            edge = edges[level + 1] if up else edges[level]
            crossing = _crossing_time(t, angle, edge, start_index, index, rising=up)
            crossing = max(crossing, start_time)
            if 0 <= level < len(PHASES):
                windows[PHASES[level]].append((start_time, crossing))
            level += 1 if up else -1
            start_time, start_index = crossing, max(index - 1, start_index)

    if 0 <= level < len(PHASES):
        windows[PHASES[level]].append((start_time, float(t[-1])))
    intervals = PhaseIntervals(**windows)
    _LOGGER.debug("Phase windows %s", intervals)
    return intervals


def _accel_zero_crossing(
    t: np.ndarray, speed: np.ndarray, accel: np.ndarray, peak_index: int
) -> Optional[float]:
    direction = math.copysign(1.0, speed[peak_index])
    moving = np.nonzero(np.abs(speed) >= RAMP_START_FRACTION * abs(speed[peak_index]))[0]
    start = int(moving[0]) if moving.size else 0
    signed = direction * accel
    for index in range(max(start, 1), signed.size):
        if signed[index - 1] > 0 >= signed[index]:
            a0, a1 = signed[index - 1], signed[index]
            return float(t[index - 1] + a0 / (a0 - a1) * (t[index] - t[index - 1]))
    return None


def extract_feature_points(
    motion: MotionRecording,
    emg: Optional[EmgRecording] = None,
    spec: Optional[PhaseSpec] = None,
    min_prominence: Optional[float] = None,
) -> FeaturePoints:
    """Find the elbow velocity peak, the end of the speed up and the EMG peaks.

    Args:
        motion (MotionRecording): Conditioned recording, angles in degrees.
        emg (EmgRecording): Optional raw EMG, enveloped here.
        spec (PhaseSpec): Phase regions, defaults apply when omitted.
        min_prominence (float): EMG peak prominence, mV. Defaults to a share
            of each envelope's range.

    Raises:
        NoPeakFoundError: when the elbow speed has no interior maximum.
    """
    spec = spec or PhaseSpec()
    elbow = motion.elbow_angle
    speed = signals.numeric_derivative(elbow)
    accel = signals.numeric_derivative(speed)
    magnitude = np.abs(speed.v)
    peak_index = int(np.argmax(magnitude))
    flat = np.ptp(magnitude) <= FLAT_TOLERANCE * magnitude[peak_index]
    if flat or peak_index in (0, len(elbow) - 1):
        raise NoPeakFoundError(
            "Elbow speed has no interior maximum",
            details={"peak_index": peak_index, "samples": len(elbow)},
        )

    peak_time, peak_angle = float(elbow.t[peak_index]), float(elbow.v[peak_index])
    crossing = _accel_zero_crossing(elbow.t, speed.v, accel.v, peak_index)
    emg_peaks: Dict[str, List[Tuple[float, float]]] = {}
    emg_lag: Dict[str, Optional[float]] = {}
    if emg is not None:
        for name, envelope in signals.emg_envelopes(emg).items():
            prominence = min_prominence
            if prominence is None:
                prominence = signals.default_prominence(envelope)
            peaks = signals.detect_peaks(envelope, prominence)
            emg_peaks[name] = peaks
            if peaks and crossing is not None:
                emg_lag[name] = max(peaks, key=lambda peak: peak[1])[0] - crossing
            else:
                emg_lag[name] = None

    points = FeaturePoints(
        velocity_peak=(peak_time, peak_angle),
        peak_speed=float(magnitude[peak_index]),
        accel_zero_crossing=crossing,
        peak_phase=phase_of(peak_angle, spec),
        emg_peaks=emg_peaks,
        emg_lag=emg_lag,
    )
    _LOGGER.info(
        "Velocity peak at %.3f s, elbow %.2f deg (%s)", peak_time, peak_angle, points.peak_phase
    )
    return points


def check_peak_placement(
    traj: SampledTrajectory, spec: PhaseSpec, joint: int = ELBOW
) -> Tuple[float, float]:
    """Elbow angle at the speed peak of a planned trajectory.

    Returns:
        (peak_angle, deviation): degrees, deviation from the target angle.
    """
    _, index = quintic.peak_velocity(traj, joint)
    peak_angle = math.degrees(float(traj.theta[joint, index]))
    return peak_angle, abs(peak_angle - spec.target_peak_angle)
