"""Planning problem and its outcome."""
import math
from typing import Any, Tuple

import attr

from .. import defaults
from .arm import ArmModel, EnergyReport
from .phase import PhaseSpec
from .swarm import OptResult
from .trajectory import SampledTrajectory


def _pair(value: Any) -> Tuple[float, float]:
    first, second = value
    return float(first), float(second)


def _non_negative(instance: Any, attribute: Any, value: float) -> None:
    if not (math.isfinite(value) and value >= 0):
        raise ValueError("{} with value {} is not valid".format(attribute.name, value))


@attr.s(frozen=True)
class Limits:
    """Joint speed and acceleration limits (shoulder, elbow).

    Args:
        omega_max (Tuple[float, float]): Max |ω|, rad/s.
        alpha_max (Tuple[float, float]): Max |α|, rad/s².
    """

    omega_max = attr.ib(type=Tuple[float, float], default=defaults.OMEGA_MAX, converter=_pair)
    alpha_max = attr.ib(type=Tuple[float, float], default=defaults.ALPHA_MAX, converter=_pair)

    @omega_max.validator
    @alpha_max.validator
    def _validate_positive(self, attribute: Any, value: Tuple[float, float]) -> None:
        if not all(math.isfinite(v) and v > 0 for v in value):
            raise ValueError("{} with value {} is not valid".format(attribute.name, value))


@attr.s(frozen=True)
class ObjectiveWeights:
    """Weights of the planning cost.

    With ``w_effort`` and ``w_peak_power`` left to 0 the cost is absolute
    work plus the peak placement and limit penalties.

    Args:
        w_energy (float): Per joule of absolute work.
        w_peak (float): Per degree of peak deviation beyond the deadband.
        w_limit (float): Per unit of limit violation.
        w_effort (float): Per N²·m²·s of squared torque integral.
        w_peak_power (float): Per watt of peak power.
    """

    w_energy = attr.ib(type=float, default=1.0, validator=_non_negative)
    w_peak = attr.ib(type=float, default=10.0, validator=_non_negative)
    w_limit = attr.ib(type=float, default=1e3, validator=_non_negative)
    w_effort = attr.ib(type=float, default=0.0, validator=_non_negative)
    w_peak_power = attr.ib(type=float, default=0.0, validator=_non_negative)


@attr.s(frozen=True)
class PlanningProblem:
    """Lift to plan.

    Args:
        arm (ArmModel): Arm carrying the payload.
        start_deg (Tuple[float, float]): Start angles (shoulder, elbow), deg.
        end_deg (Tuple[float, float]): End angles (shoulder, elbow), deg.
        duration (float): Lift duration, s.
        phase (PhaseSpec): Elbow phases and peak target.
        limits (Limits): Joint limits.
        weights (ObjectiveWeights): Cost weights.
        dt (float): Sampling step of the plans, s.
    """

    arm = attr.ib(type=ArmModel, factory=ArmModel)
    start_deg = attr.ib(type=Tuple[float, float], default=defaults.START_DEG, converter=_pair)
    end_deg = attr.ib(type=Tuple[float, float], default=defaults.END_DEG, converter=_pair)
    duration = attr.ib(type=float, default=defaults.PLAN_DURATION)
    phase = attr.ib(type=PhaseSpec, factory=PhaseSpec)
    limits = attr.ib(type=Limits, factory=Limits)
    weights = attr.ib(type=ObjectiveWeights, factory=ObjectiveWeights)
    dt = attr.ib(type=float, default=defaults.PLAN_DT)

    @duration.validator
    def _validate_duration(self, attribute: Any, value: float) -> None:
        if not (math.isfinite(value) and value > 0):
            raise ValueError("duration with value {} is not valid".format(value))

    @dt.validator
    def _validate_dt(self, attribute: Any, value: float) -> None:
        if not (math.isfinite(value) and 0 < value < self.duration):
            raise ValueError("dt with value {} is not valid".format(value))

    @end_deg.validator
    def _validate_end(self, attribute: Any, value: Tuple[float, float]) -> None:
        if not all(math.isfinite(v) for v in value + self.start_deg):
            raise ValueError("start and end angles must be finite")
        if value[1] == self.start_deg[1]:
            raise ValueError("the elbow must move, start and end are both {}".format(value[1]))

    @property
    def start_rad(self) -> Tuple[float, float]:
        return math.radians(self.start_deg[0]), math.radians(self.start_deg[1])

    @property
    def end_rad(self) -> Tuple[float, float]:
        return math.radians(self.end_deg[0]), math.radians(self.end_deg[1])


@attr.s(frozen=True)
class PlanResult:
    """Standard against optimized plan.

    Reductions are ``100 * (standard - optimized) / standard``.

    Args:
        standard (SampledTrajectory): Rest to rest quintic plan.
        standard_energy (EnergyReport): Its energy accounting.
        optimized (SampledTrajectory): Best via point plan.
        optimized_energy (EnergyReport): Its energy accounting.
        work_reduction_pct (float): Absolute work reduction, %.
        peak_power_reduction_pct (float): Peak power reduction, %.
        effort_reduction_pct (float): Squared torque integral reduction, %.
        standard_peak_angle (float): Elbow angle at the standard speed peak, deg.
        peak_angle_achieved (float): Elbow angle at the optimized speed peak, deg.
        peak_angle_deviation (float): Distance of the above to the target, deg.
        violation (float): Limit violation of the optimized plan.
        infeasible (bool): Whether violation exceeds the tolerance.
        decision (Tuple[float, ...]): Decision vector of the optimized plan.
        pso (OptResult): Swarm outcome.
    """

    standard = attr.ib(type=SampledTrajectory)
    standard_energy = attr.ib(type=EnergyReport)
    optimized = attr.ib(type=SampledTrajectory)
    optimized_energy = attr.ib(type=EnergyReport)
    work_reduction_pct = attr.ib(type=float)
    peak_power_reduction_pct = attr.ib(type=float)
    effort_reduction_pct = attr.ib(type=float)
    standard_peak_angle = attr.ib(type=float)
    peak_angle_achieved = attr.ib(type=float)
    peak_angle_deviation = attr.ib(type=float)
    violation = attr.ib(type=float)
    infeasible = attr.ib(type=bool)
    decision = attr.ib(type=Tuple[float, ...], converter=tuple)
    pso = attr.ib(type=OptResult)


@attr.s(frozen=True)
class PlanEvaluation:
    """One decoded decision vector, sampled and costed.

    Args:
        trajectory (SampledTrajectory): Sampled plan with torques.
        energy (EnergyReport): Its energy accounting.
        peak_angle (float): Elbow angle at the elbow speed peak, deg.
        deviation (float): Distance of peak_angle to the target, deg.
        violation (float): Integrated overshoot of the joint limits.
        cost (float): Objective value.
    """

    trajectory = attr.ib(type=SampledTrajectory)
    energy = attr.ib(type=EnergyReport)
    peak_angle = attr.ib(type=float)
    deviation = attr.ib(type=float)
    violation = attr.ib(type=float)
    cost = attr.ib(type=float)
