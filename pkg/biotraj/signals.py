"""Conditioning of recorded motion and EMG signals."""
import logging
import math
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy import signal

from . import defaults
from .error import ModelError
from .model import EmgRecording, FilterSpec, MotionRecording, TimeSeries

_LOGGER = logging.getLogger(__name__)


def resample_uniform(series: TimeSeries, rate_hz: Optional[float] = None) -> TimeSeries:
    """Linearly interpolate a series on a uniform grid.

    Args:
        series (TimeSeries): Series to resample.
        rate_hz (float): Target rate, defaults to the median rate of *series*.

    Returns:
        TimeSeries: Starting at the first sample, never extrapolating past the
        last one.
    """
    if len(series) < 2:
        raise ModelError(
            "Resampling needs at least two samples", code="too_few_samples", details=len(series)
        )
    rate = series.sampling_rate if rate_hz is None else rate_hz
    if not (math.isfinite(rate) and rate > 0):
        raise ModelError("Sampling rate must be positive", code="invalid_span", details=rate)
    count = int(math.floor(series.span * rate + 1e-9)) + 1
    times = series.t[0] + np.arange(count) / rate
    _LOGGER.debug("Resampled %s samples to %s at %s Hz", len(series), count, rate)
    return TimeSeries(times, np.interp(times, series.t, series.v), series.name)


def _uniform(series: TimeSeries) -> TimeSeries:
    if series.is_uniform:
        return series
    _LOGGER.warning(
        "Series %s is not uniformly sampled, resampling at %.6g Hz",
        series.name,
        series.sampling_rate,
    )
    return resample_uniform(series)


def lowpass_zero_phase(series: TimeSeries, spec: FilterSpec) -> TimeSeries:
    """Apply a Butterworth low-pass forward then backward.

    Non uniform series are first resampled with :func:`resample_uniform`.
    Ends are padded by odd reflection.

    Raises:
        ModelError: with code ``cutoff_above_nyquist`` when the cutoff is not
            below half the sampling rate, ``too_few_samples`` when the series
            has less than 2 samples.
    """
    if len(series) < 2:
        raise ModelError(
            "Filtering needs at least two samples", code="too_few_samples", details=len(series)
        )
    series = _uniform(series)
    nyquist = series.sampling_rate / 2.0
    if spec.cutoff_hz >= nyquist:
        raise ModelError(
            "Cutoff frequency must be below the Nyquist frequency",
            code="cutoff_above_nyquist",
            details={"cutoff_hz": spec.cutoff_hz, "nyquist_hz": nyquist},
        )
    b, a = signal.butter(spec.order, spec.cutoff_hz / nyquist, btype="low")
    padlen = min(3 * max(len(a), len(b)), len(series) - 1)
    _LOGGER.debug(
        "Butterworth order %s, cutoff %s Hz, fs %.6g Hz, padlen %s",
        spec.order,
        spec.cutoff_hz,
        2 * nyquist,
        padlen,
    )
    filtered = signal.filtfilt(b, a, series.v, padtype="odd", padlen=padlen)
    return series.with_values(filtered)


def emg_envelope(
    channel: TimeSeries, spec: FilterSpec = FilterSpec(defaults.EMG_CUTOFF_HZ)
) -> TimeSeries:
    """Full wave rectify then low-pass a raw EMG channel.

    The result is clamped at zero.
    """
    rectified = channel.with_values(np.abs(channel.v))
    envelope = lowpass_zero_phase(rectified, spec)
    return envelope.with_values(np.clip(envelope.v, 0.0, None))


def emg_envelopes(
    recording: EmgRecording, spec: FilterSpec = FilterSpec(defaults.EMG_CUTOFF_HZ)
) -> Dict[str, TimeSeries]:
    """Envelope of every channel of a recording."""
    return {name: emg_envelope(channel, spec) for name, channel in recording.channels.items()}


def detect_peaks(series: TimeSeries, min_prominence: float) -> List[Tuple[float, float]]:
    """Local maxima standing out by at least *min_prominence*.

    Returns:
        List[Tuple[float, float]]: ``(time, value)`` ordered by time.
    """
    if len(series) < 3:
        raise ModelError(
            "Peak detection needs at least three samples",
            code="too_few_samples",
            details=len(series),
        )
    indices, _ = signal.find_peaks(series.v, prominence=min_prominence)
    return [(float(series.t[i]), float(series.v[i])) for i in indices]


def default_prominence(series: TimeSeries) -> float:
    """Prominence threshold relative to the range of the series."""
    return defaults.MIN_PROMINENCE_FRACTION * float(np.ptp(series.v))


def numeric_derivative(series: TimeSeries) -> TimeSeries:
    """Time derivative, central differences inside, one sided at both ends."""
    if len(series) < 2:
        raise ModelError(
            "Differentiation needs at least two samples",
            code="too_few_samples",
            details=len(series),
        )
    edge_order = 2 if len(series) >= 3 else 1
    return series.with_values(np.gradient(series.v, series.t, edge_order=edge_order))


def condition_motion(
    recording: MotionRecording, spec: FilterSpec = FilterSpec(defaults.MOTION_CUTOFF_HZ)
) -> MotionRecording:
    """Low-pass every signal of a motion recording."""
    wrist = recording.wrist_accel
    return MotionRecording(
        shoulder_angle=lowpass_zero_phase(recording.shoulder_angle, spec),
        elbow_angle=lowpass_zero_phase(recording.elbow_angle, spec),
        wrist_accel=lowpass_zero_phase(wrist, spec) if wrist is not None else None,
    )
