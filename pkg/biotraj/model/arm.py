"""Two-link planar arm description and dynamics values."""
import math
from typing import Any, Tuple

import attr
import numpy as np

from .. import defaults


def _positive(instance: Any, attribute: Any, value: float) -> None:
    if not (math.isfinite(value) and value > 0):
        raise ValueError("{} with value {} is not valid".format(attribute.name, value))


def _non_negative(instance: Any, attribute: Any, value: float) -> None:
    if not (math.isfinite(value) and value >= 0):
        raise ValueError("{} with value {} is not valid".format(attribute.name, value))


def _finite(instance: Any, attribute: Any, value: float) -> None:
    if not math.isfinite(value):
        raise ValueError("{} with value {} is not valid".format(attribute.name, value))


@attr.s(frozen=True)
class ArmModel:
    """Shoulder/elbow stick model moving in the sagittal plane.

    Each link is a thin uniform rod (center of mass at mid length, inertia
    ``m * l**2 / 12`` about it), the payload is a point mass at the tip of
    link 2. Angles are measured from the hanging-down vertical.

    Args:
        l1 (float): Upper arm length, m.
        l2 (float): Forearm (and hand) length, m.
        m1 (float): Upper arm mass, kg.
        m2 (float): Forearm mass, kg.
        m_payload (float): Mass carried at the tip, kg.
        g (float): Gravitational acceleration, m/s².
    """

    l1 = attr.ib(type=float, default=defaults.BENCHMARK_L1, validator=_positive)
    l2 = attr.ib(type=float, default=defaults.BENCHMARK_L2, validator=_positive)
    m1 = attr.ib(type=float, default=defaults.DEFAULT_M1, validator=_non_negative)
    m2 = attr.ib(type=float, default=defaults.DEFAULT_M2, validator=_non_negative)
    m_payload = attr.ib(type=float, default=defaults.BENCHMARK_PAYLOAD, validator=_non_negative)
    g = attr.ib(type=float, default=defaults.GRAVITY, validator=_non_negative)

    @property
    def inertia1(self) -> float:
        """float: Inertia of link 1 about its center of mass."""
        return self.m1 * self.l1 ** 2 / 12.0

    @property
    def inertia2(self) -> float:
        """float: Inertia of link 2 about its center of mass."""
        return self.m2 * self.l2 ** 2 / 12.0

    @property
    def shoulder_moment(self) -> float:
        """float: First mass moment of everything carried by link 1 about the
        shoulder, kg·m."""
        return self.m1 * self.l1 / 2.0 + (self.m2 + self.m_payload) * self.l1

    @property
    def elbow_moment(self) -> float:
        """float: First mass moment of link 2 and payload about the elbow, kg·m."""
        return self.m2 * self.l2 / 2.0 + self.m_payload * self.l2

    @property
    def inertia_constants(self) -> Tuple[float, float, float]:
        """Tuple[float, float, float]: ``(a, b, h)`` such that
        ``M11 = a + 2h cos θ2``, ``M12 = b + h cos θ2`` and ``M22 = b``."""
        a2 = self.l2 / 2.0
        a = (
            self.m1 * (self.l1 / 2.0) ** 2
            + self.inertia1
            + self.m2 * (self.l1 ** 2 + a2 ** 2)
            + self.inertia2
            + self.m_payload * (self.l1 ** 2 + self.l2 ** 2)
        )
        b = self.m2 * a2 ** 2 + self.inertia2 + self.m_payload * self.l2 ** 2
        return a, b, self.elbow_moment * self.l1


@attr.s(frozen=True)
class JointState:
    """Joint space state of the arm.

    Args:
        theta1 (float): Shoulder angle from the hanging vertical, rad.
        theta2 (float): Elbow flexion relative to link 1, rad.
        omega1 (float): Shoulder angular velocity, rad/s.
        omega2 (float): Elbow angular velocity, rad/s.
        alpha1 (float): Shoulder angular acceleration, rad/s².
        alpha2 (float): Elbow angular acceleration, rad/s².
    """

    theta1 = attr.ib(type=float, default=0.0, validator=_finite)
    theta2 = attr.ib(type=float, default=0.0, validator=_finite)
    omega1 = attr.ib(type=float, default=0.0, validator=_finite)
    omega2 = attr.ib(type=float, default=0.0, validator=_finite)
    alpha1 = attr.ib(type=float, default=0.0, validator=_finite)
    alpha2 = attr.ib(type=float, default=0.0, validator=_finite)


@attr.s(frozen=True)
class DynamicsTerms:
    """Terms of ``M(θ)·θ̈ + C(θ, θ̇) + G(θ) = τ``.

    Args:
        m11, m12, m21, m22 (float): Mass matrix entries, kg·m².
        c (Tuple[float, float]): Coriolis and centrifugal torques, N·m.
        g (Tuple[float, float]): Gravity torques, N·m.
    """

    m11 = attr.ib(type=float)
    m12 = attr.ib(type=float)
    m21 = attr.ib(type=float)
    m22 = attr.ib(type=float)
    c = attr.ib(type=Tuple[float, float])
    g = attr.ib(type=Tuple[float, float])

    @property
    def mass_matrix(self) -> np.ndarray:
        """np.ndarray: 2x2 mass matrix."""
        return np.array([[self.m11, self.m12], [self.m21, self.m22]])


@attr.s(frozen=True)
class EnergyReport:
    """Energy accounting of a sampled trajectory.

    Args:
        work_per_joint (Tuple[float, float]): ∫|τ·ω| dt per joint, J.
        total_work (float): Sum of the above, J.
        peak_power (float): Max of the summed absolute joint power, W.
        power_series (np.ndarray): Summed absolute joint power per sample, W.
        effort_per_joint (Tuple[float, float]): ∫τ² dt per joint, N²·m²·s.
            This is proportional to the resistive loss of a DC drive.
        total_effort (float): Sum of the above.
    """

    work_per_joint = attr.ib(type=Tuple[float, float])
    total_work = attr.ib(type=float)
    peak_power = attr.ib(type=float)
    power_series = attr.ib(type=np.ndarray, eq=False, repr=False)
    effort_per_joint = attr.ib(type=Tuple[float, float], default=(0.0, 0.0))
    total_effort = attr.ib(type=float, default=0.0)
