"""Recorded signals: joint angles and surface EMG."""
import math
from typing import Any, Dict, Optional

import attr
import numpy as np

from .. import defaults
from .constants import EMG_CHANNELS


def _float_array(value: Any) -> np.ndarray:
    return np.asarray(value, dtype=float)


@attr.s(frozen=True)
class TimeSeries:
    """Sampled scalar signal.

    Args:
        t (np.ndarray): Strictly increasing times, s.
        v (np.ndarray): Values, unit depends on the signal.
        name (str): Label, used as column name when written.
    """

    t = attr.ib(type=np.ndarray, converter=_float_array, eq=False)
    v = attr.ib(type=np.ndarray, converter=_float_array, eq=False)
    name = attr.ib(type=str, default="value")

    def __attrs_post_init__(self) -> None:
        if self.t.ndim != 1 or self.t.shape != self.v.shape:
            raise ValueError(
                "t and v must be 1-d with equal lengths, got {} and {}".format(
                    self.t.shape, self.v.shape
                )
            )
        if not (np.all(np.isfinite(self.t)) and np.all(np.isfinite(self.v))):
            raise ValueError("time series contains non finite values")
        if np.any(np.diff(self.t) <= 0):
            raise ValueError("time must be strictly increasing")

    def __len__(self) -> int:
        return int(self.t.shape[0])

    @property
    def span(self) -> float:
        """float: Time between first and last sample, s."""
        return float(self.t[-1] - self.t[0]) if len(self) else 0.0

    @property
    def is_uniform(self) -> bool:
        """bool: Whether samples are evenly spaced."""
        if len(self) < 3:
            return True
        steps = np.diff(self.t)
        return bool(np.max(np.abs(steps - steps[0])) <= defaults.DT_TOLERANCE * steps[0])

    @property
    def sampling_rate(self) -> float:
        """float: Median sampling rate, Hz."""
        if len(self) < 2:
            raise ValueError("sampling rate needs at least two samples")
        return float(1.0 / np.median(np.diff(self.t)))

    def with_values(self, values: np.ndarray) -> "TimeSeries":
        """Same time base, other values."""
        return TimeSeries(self.t, values, self.name)


@attr.s(frozen=True)
class MotionRecording:
    """Shoulder and elbow angles of a lift, degrees.

    Args:
        shoulder_angle (TimeSeries): Shoulder angle from the vertical, degrees.
        elbow_angle (TimeSeries): Elbow flexion, degrees.
        wrist_accel (TimeSeries): Optional wrist acceleration, m/s².
    """

    shoulder_angle = attr.ib(type=TimeSeries)
    elbow_angle = attr.ib(type=TimeSeries)
    wrist_accel = attr.ib(type=Optional[TimeSeries], default=None)

    @property
    def t(self) -> np.ndarray:
        return self.elbow_angle.t


@attr.s(frozen=True)
class EmgRecording:
    """Four channel surface EMG, millivolts."""

    deltoid = attr.ib(type=TimeSeries)
    triceps = attr.ib(type=TimeSeries)
    biceps = attr.ib(type=TimeSeries)
    brachioradialis = attr.ib(type=TimeSeries)

    def __attrs_post_init__(self) -> None:
        reference = self.deltoid.t
        for name in EMG_CHANNELS[1:]:
            if not np.array_equal(getattr(self, name).t, reference):
                raise ValueError("channel {} does not share the sampling".format(name))

    @property
    def channels(self) -> Dict[str, TimeSeries]:
        """Dict[str, TimeSeries]: Channels by muscle name, file order."""
        return {name: getattr(self, name) for name in EMG_CHANNELS}


@attr.s(frozen=True)
class FilterSpec:
    """Low-pass filter settings.

    The cutoff is checked against the Nyquist frequency of a series when the
    filter is applied.
    """

    cutoff_hz = attr.ib(type=float)
    order = attr.ib(type=int, default=defaults.FILTER_ORDER)

    @cutoff_hz.validator
    def _validate_cutoff(self, attribute: Any, value: float) -> None:
        if not (math.isfinite(value) and value > 0):
            raise ValueError("cutoff_hz with value {} is not valid".format(value))

    @order.validator
    def _validate_order(self, attribute: Any, value: int) -> None:
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise ValueError("order with value {} is not valid".format(value))
