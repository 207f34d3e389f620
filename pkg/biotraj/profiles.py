"""Classic single joint velocity profiles.

Every profile starts and ends at rest and covers ``thetaf - theta0`` in the
given duration:

* ``trapezoid``: constant acceleration on the first and last third, cruise
  in between.
* ``s_curve``: same phases, the speed ramps follow a half cosine so the
  acceleration starts and ends at zero.
* ``triangle``: constant acceleration then deceleration, peak at mid time.
* ``cubic``: ``3s² - 2s³``.
* ``quintic``: ``10s³ - 15s⁴ + 6s⁵``, the rest to rest quintic.
"""
import logging
import math
from typing import Callable, Dict, Tuple

import numpy as np

from . import defaults, quintic
from .error import ModelError, model_errors
from .model import SampledTrajectory
from .utils import uniform_grid

_LOGGER = logging.getLogger(__name__)

Arrays = Tuple[np.ndarray, np.ndarray, np.ndarray]

TRAPEZOID_RAMP_FRACTION = 1.0 / 3.0


def _linear_ramp(r: np.ndarray, ramp: float, cruise: float) -> Arrays:
    accel = cruise / ramp
    return accel * r ** 2 / 2.0, accel * r, np.full_like(r, accel)


def _sine_ramp(r: np.ndarray, ramp: float, cruise: float) -> Arrays:
    phase = math.pi * r / ramp
    return (
        cruise / 2.0 * (r - ramp / math.pi * np.sin(phase)),
        cruise / 2.0 * (1.0 - np.cos(phase)),
        cruise * math.pi / (2.0 * ramp) * np.sin(phase),
    )


def _ramped(
    t: np.ndarray,
    distance: float,
    duration: float,
    ramp: float,
    shape: Callable[[np.ndarray, float, float], Arrays],
) -> Arrays:
    cruise = distance / (duration - ramp)
    rising = np.clip(t, 0.0, ramp)
    falling = np.clip(duration - t, 0.0, ramp)
    up = shape(rising, ramp, cruise)
    down = shape(falling, ramp, cruise)
    ramp_distance = cruise * ramp / 2.0

    theta = np.where(
        t <= ramp,
        up[0],
        np.where(t >= duration - ramp, distance - down[0], ramp_distance + cruise * (t - ramp)),
    )
    omega = np.where(t <= ramp, up[1], np.where(t >= duration - ramp, down[1], cruise))
    alpha = np.where(t <= ramp, up[2], np.where(t >= duration - ramp, -down[2], 0.0))
    return theta, omega, alpha


def _trapezoid(t: np.ndarray, distance: float, duration: float) -> Arrays:
    return _ramped(t, distance, duration, duration * TRAPEZOID_RAMP_FRACTION, _linear_ramp)


def _s_curve(t: np.ndarray, distance: float, duration: float) -> Arrays:
    return _ramped(t, distance, duration, duration * TRAPEZOID_RAMP_FRACTION, _sine_ramp)


def _triangle(t: np.ndarray, distance: float, duration: float) -> Arrays:
    ramp = duration / 2.0
    accel = 4.0 * distance / duration ** 2
    rising = t <= ramp
    falling = duration - t
    theta = np.where(rising, accel * t ** 2 / 2.0, distance - accel * falling ** 2 / 2.0)
    omega = np.where(rising, accel * t, accel * falling)
    alpha = np.where(rising, accel, -accel)
    return theta, omega, alpha


def _cubic(t: np.ndarray, distance: float, duration: float) -> Arrays:
    s = t / duration
    return (
        distance * (3.0 * s ** 2 - 2.0 * s ** 3),
        distance / duration * 6.0 * s * (1.0 - s),
        distance / duration ** 2 * (6.0 - 12.0 * s),
    )


def _quintic(t: np.ndarray, distance: float, duration: float) -> Arrays:
    segment = quintic.rest_to_rest(0.0, distance, duration).joints[0][0]
    theta, omega, alpha = quintic.polyval(segment, t)
    return theta, omega, alpha


_PROFILES: Dict[str, Callable[[np.ndarray, float, float], Arrays]] = {
    "trapezoid": _trapezoid,
    "s_curve": _s_curve,
    "triangle": _triangle,
    "cubic": _cubic,
    "quintic": _quintic,
}

PROFILE_KINDS = tuple(_PROFILES)
"""Names accepted by :func:`classic_profile`."""


@model_errors()
def classic_profile(
    kind: str, theta0: float, thetaf: float, duration: float, dt: float = defaults.PLAN_DT
) -> SampledTrajectory:
    """Sample a single joint profile of the named family.

    Args:
        kind (str): One of :data:`PROFILE_KINDS`.
        theta0 (float): Start angle.
        thetaf (float): End angle.
        duration (float): Duration, s.
        dt (float): Sampling step, s.

    Returns:
        SampledTrajectory: One joint, angles in the unit of *theta0*.

    Raises:
        ModelError: with code ``unknown_profile`` for an unknown kind, or
            ``invalid_span`` for a non positive duration or step.
    """
    profile = _PROFILES.get(kind)
    if profile is None:
        raise ModelError(
            "Unknown velocity profile", code="unknown_profile", details={"kind": kind}
        )
    if not (math.isfinite(duration) and duration > 0):
        raise ModelError("Duration must be positive", code="invalid_span", details=duration)
    if not (math.isfinite(dt) and 0 < dt < duration):
        raise ModelError(
            "Sampling step must be positive and shorter than the duration",
            code="invalid_span",
            details=dt,
        )

    times, partial = uniform_grid(0.0, duration, dt)
    theta, omega, alpha = profile(times, thetaf - theta0, duration)
    _LOGGER.debug("Sampled %s profile on %s points", kind, times.size)
    return SampledTrajectory(
        t=times,
        theta=[theta0 + theta],
        omega=[omega],
        alpha=[alpha],
        dt=dt,
        partial_last_step=partial,
    )
