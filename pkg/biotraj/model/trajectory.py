"""Joint trajectories, polynomial and sampled."""
import math
from typing import Any, Optional, Tuple

import attr
import numpy as np

from .. import defaults

_SPAN_TOLERANCE = 1e-12


def _finite(instance: Any, attribute: Any, value: float) -> None:
    if not math.isfinite(value):
        raise ValueError("{} with value {} is not valid".format(attribute.name, value))


def _float_array(value: Any) -> np.ndarray:
    return np.asarray(value, dtype=float)


def _optional_float_array(value: Any) -> Optional[np.ndarray]:
    return None if value is None else np.asarray(value, dtype=float)


@attr.s(frozen=True)
class BoundaryCondition:
    """Full kinematic state of one joint at an instant.

    Args:
        theta (float): Angle, rad.
        omega (float): Angular velocity, rad/s.
        alpha (float): Angular acceleration, rad/s².
    """

    theta = attr.ib(type=float, validator=_finite)
    omega = attr.ib(type=float, default=0.0, validator=_finite)
    alpha = attr.ib(type=float, default=0.0, validator=_finite)


@attr.s(frozen=True)
class QuinticSegment:
    """Fifth degree polynomial on ``[t0, tf]``.

    Coefficients are expressed in local time ``s = t - t0``, so that
    ``theta(t) = d0 + d1 s + d2 s² + d3 s³ + d4 s⁴ + d5 s⁵``.

    Args:
        t0 (float): Start of the span, s.
        tf (float): End of the span, s.
        coefficients (Tuple[float, ...]): ``(d0, ..., d5)``.
    """

    t0 = attr.ib(type=float, validator=_finite)
    tf = attr.ib(type=float, validator=_finite)
    coefficients = attr.ib(type=Tuple[float, ...], converter=tuple)

    @tf.validator
    def _validate_tf(self, attribute: Any, value: float) -> None:
        if not value > self.t0:
            raise ValueError("tf={} must be greater than t0={}".format(value, self.t0))

    @coefficients.validator
    def _validate_coefficients(self, attribute: Any, value: Tuple[float, ...]) -> None:
        if len(value) != 6 or not all(math.isfinite(c) for c in value):
            raise ValueError("a quintic needs six finite coefficients, got {}".format(value))

    @property
    def duration(self) -> float:
        """float: Length of the span, s."""
        return self.tf - self.t0


@attr.s(frozen=True)
class PiecewiseTrajectory:
    """Per joint chain of quintic segments covering the same time span.

    Args:
        joints (Tuple[Tuple[QuinticSegment, ...], ...]): One ordered chain
            per joint, shoulder first.
    """

    joints = attr.ib(type=Tuple[Tuple[QuinticSegment, ...], ...])

    @joints.validator
    def _validate_joints(
        self, attribute: Any, value: Tuple[Tuple[QuinticSegment, ...], ...]
    ) -> None:
        if not value or any(not chain for chain in value):
            raise ValueError("every joint needs at least one segment")
        for chain in value:
            for left, right in zip(chain, chain[1:]):
                if abs(left.tf - right.t0) > _SPAN_TOLERANCE:
                    raise ValueError("gap between {} and {}".format(left.tf, right.t0))
            if (
                abs(chain[0].t0 - value[0][0].t0) > _SPAN_TOLERANCE
                or abs(chain[-1].tf - value[0][-1].tf) > _SPAN_TOLERANCE
            ):
                raise ValueError("joints do not cover the same span")

    @property
    def t0(self) -> float:
        """float: Start time, s."""
        return self.joints[0][0].t0

    @property
    def tf(self) -> float:
        """float: End time, s."""
        return self.joints[0][-1].tf

    @property
    def duration(self) -> float:
        return self.tf - self.t0


@attr.s(frozen=True)
class SampledTrajectory:
    """Joint trajectory sampled in time.

    Arrays of joint quantities have shape ``(joints, n)``, shoulder first for
    arm plans, one row for a single joint profile. Energy accounting needs a
    uniform grid, see :attr:`is_uniform`.

    Planned grids always contain both endpoints; when the span is not a whole
    multiple of ``dt`` the last step is shorter and ``partial_last_step``
    is set.

    Args:
        t (np.ndarray): Sample times, s.
        theta (np.ndarray): Angles, rad.
        omega (np.ndarray): Angular velocities, rad/s.
        alpha (np.ndarray): Angular accelerations, rad/s².
        dt (float): Nominal sampling step, s.
        tau (np.ndarray): Optional joint torques, N·m.
        power (np.ndarray): Optional summed absolute joint power, W.
        partial_last_step (bool): Whether the last step is shorter than dt.
    """

    t = attr.ib(type=np.ndarray, converter=_float_array, eq=False, repr=False)
    theta = attr.ib(type=np.ndarray, converter=_float_array, eq=False, repr=False)
    omega = attr.ib(type=np.ndarray, converter=_float_array, eq=False, repr=False)
    alpha = attr.ib(type=np.ndarray, converter=_float_array, eq=False, repr=False)
    dt = attr.ib(type=float)
    tau = attr.ib(
        type=Optional[np.ndarray],
        default=None,
        converter=_optional_float_array,
        eq=False,
        repr=False,
    )
    power = attr.ib(
        type=Optional[np.ndarray],
        default=None,
        converter=_optional_float_array,
        eq=False,
        repr=False,
    )
    partial_last_step = attr.ib(type=bool, default=False)

    @dt.validator
    def _validate_dt(self, attribute: Any, value: float) -> None:
        if not (math.isfinite(value) and value > 0):
            raise ValueError("dt with value {} is not valid".format(value))

    def __attrs_post_init__(self) -> None:
        count = self.t.shape[0]
        if self.t.ndim != 1 or count < 2:
            raise ValueError("a sampled trajectory needs at least two samples")
        if self.theta.ndim != 2 or self.theta.shape[1] != count:
            raise ValueError(
                "theta has shape {}, expected (joints, {})".format(self.theta.shape, count)
            )
        for name in ("omega", "alpha", "tau"):
            value = getattr(self, name)
            if value is not None and value.shape != self.theta.shape:
                raise ValueError(
                    "{} has shape {}, expected {}".format(name, value.shape, self.theta.shape)
                )
        if self.power is not None and self.power.shape != (count,):
            raise ValueError("power has shape {}, expected ({},)".format(self.power.shape, count))
        if np.any(np.diff(self.t) <= 0):
            raise ValueError("sample times must be strictly increasing")

    @property
    def is_uniform(self) -> bool:
        """bool: Whether every step equals dt, the last one excepted when
        partial_last_step is set."""
        steps = np.diff(self.t)
        regular = steps[:-1] if self.partial_last_step else steps
        if self.partial_last_step and steps[-1] > self.dt * (1 + defaults.DT_TOLERANCE):
            return False
        return bool(
            regular.size == 0
            or np.max(np.abs(regular - self.dt)) <= defaults.DT_TOLERANCE * self.dt
        )

    @property
    def joints(self) -> int:
        """int: Number of joints."""
        return int(self.theta.shape[0])

    @property
    def size(self) -> int:
        """int: Number of samples."""
        return int(self.t.shape[0])

    @property
    def duration(self) -> float:
        return float(self.t[-1] - self.t[0])

    @property
    def has_torques(self) -> bool:
        return self.tau is not None and self.power is not None
