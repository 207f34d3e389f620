"""Lagrangian dynamics of the two-link arm.

Angles follow :class:`biotraj.model.JointState`: ``theta1`` from the hanging
vertical, ``theta2`` relative to link 1. With ``phi = theta1 + theta2`` the
equations of motion read ``M(theta) alpha + C(theta, omega) + G(theta) = tau``
with::

    M11 = a + 2 h cos(theta2)     M12 = M21 = b + h cos(theta2)     M22 = b
    C1  = -h sin(theta2) (2 omega1 omega2 + omega2²)
    C2  =  h sin(theta2) omega1²
    G1  =  g (k1 sin(theta1) + k2 sin(phi))
    G2  =  g k2 sin(phi)

where ``a, b, h`` are :attr:`ArmModel.inertia_constants`, ``k1`` is
:attr:`ArmModel.shoulder_moment` and ``k2`` :attr:`ArmModel.elbow_moment`.
Every function accepts numpy arrays as well as floats unless stated.
"""
import logging
import math
from typing import Callable, Optional, Tuple

import attr
import numpy as np
from scipy.integrate import trapezoid

from . import defaults
from .error import IllConditionedError, InputDataError, ModelError
from .model import ArmModel, DynamicsTerms, EnergyReport, JointState, SampledTrajectory
from .utils import uniform_grid

_LOGGER = logging.getLogger(__name__)

TorqueFunction = Callable[[float, np.ndarray], Tuple[float, float]]
"""``torque(t, [theta1, theta2, omega1, omega2]) -> (tau1, tau2)``."""


def _mass(model: ArmModel, theta2):  # type: ignore
    a, b, h = model.inertia_constants
    cos2 = np.cos(theta2)
    return a + 2.0 * h * cos2, b + h * cos2, b


def _coriolis(model: ArmModel, theta2, omega1, omega2):  # type: ignore
    h = model.inertia_constants[2]
    sin2 = np.sin(theta2)
    return -h * sin2 * (2.0 * omega1 * omega2 + omega2 ** 2), h * sin2 * omega1 ** 2


def _gravity(model: ArmModel, theta1, theta2):  # type: ignore
    elbow = model.g * model.elbow_moment * np.sin(theta1 + theta2)
    return model.g * model.shoulder_moment * np.sin(theta1) + elbow, elbow


def kinetic_energy(model: ArmModel, state: JointState) -> float:
    """Kinetic energy ``0.5 * omega' M omega``, J.

    For equal masses and lengths and no payload this is exactly
    ``m l² (5/6 w1² + 1/6 w2² + 1/3 w1 w2 + 1/2 cos(theta2) w1 (w1 + w2))``.
    """
    m11, m12, m22 = _mass(model, state.theta2)
    w1, w2 = state.omega1, state.omega2
    return float(0.5 * (m11 * w1 ** 2 + 2.0 * m12 * w1 * w2 + m22 * w2 ** 2))


def potential_energy(model: ArmModel, theta1, theta2):  # type: ignore
    """Gravitational potential energy, J, zero at the shoulder height."""
    return -model.g * (
        model.shoulder_moment * np.cos(theta1) + model.elbow_moment * np.cos(theta1 + theta2)
    )


def total_energy(model: ArmModel, state: JointState) -> float:
    """Kinetic plus potential energy, J."""
    return kinetic_energy(model, state) + float(
        potential_energy(model, state.theta1, state.theta2)
    )


def tip_position(model: ArmModel, theta1, theta2):  # type: ignore
    """Position of the payload in the sagittal plane.

    Returns:
        (x, y): forward and upward coordinates from the shoulder, m.
    """
    phi = theta1 + theta2
    return (
        model.l1 * np.sin(theta1) + model.l2 * np.sin(phi),
        -model.l1 * np.cos(theta1) - model.l2 * np.cos(phi),
    )


def dynamics_terms(
    model: ArmModel, theta1: float, theta2: float, omega1: float, omega2: float
) -> DynamicsTerms:
    """Evaluate ``M``, ``C`` and ``G`` at one configuration."""
    m11, m12, m22 = _mass(model, theta2)
    c1, c2 = _coriolis(model, theta2, omega1, omega2)
    g1, g2 = _gravity(model, theta1, theta2)
    return DynamicsTerms(
        m11=float(m11),
        m12=float(m12),
        m21=float(m12),
        m22=float(m22),
        c=(float(c1), float(c2)),
        g=(float(g1), float(g2)),
    )


def joint_torques(model: ArmModel, theta1, theta2, omega1, omega2, alpha1, alpha2):  # type: ignore
    """Inverse dynamics on whole arrays of samples.

    Returns:
        np.ndarray: Shape ``(2,) + shape(theta1)``, N·m.
    """
    m11, m12, m22 = _mass(model, theta2)
    c1, c2 = _coriolis(model, theta2, omega1, omega2)
    g1, g2 = _gravity(model, theta1, theta2)
    return np.array([m11 * alpha1 + m12 * alpha2 + c1 + g1, m12 * alpha1 + m22 * alpha2 + c2 + g2])


def inverse_dynamics(model: ArmModel, state: JointState) -> Tuple[float, float]:
    """Torques ``M alpha + C + G`` producing the accelerations of *state*, N·m."""
    tau = joint_torques(
        model,
        state.theta1,
        state.theta2,
        state.omega1,
        state.omega2,
        state.alpha1,
        state.alpha2,
    )
    return float(tau[0]), float(tau[1])


def forward_dynamics(
    model: ArmModel,
    theta1: float,
    theta2: float,
    omega1: float,
    omega2: float,
    tau1: float,
    tau2: float,
) -> Tuple[float, float]:
    """Accelerations ``M^-1 (tau - C - G)`` under the given torques, rad/s².

    Raises:
        IllConditionedError: when the condition number of ``M`` exceeds
            :data:`biotraj.defaults.MAX_CONDITION_NUMBER`.
    """
    terms = dynamics_terms(model, theta1, theta2, omega1, omega2)
    mass = terms.mass_matrix
    condition = np.linalg.cond(mass)
    if not condition <= defaults.MAX_CONDITION_NUMBER:
        raise IllConditionedError(
            "Mass matrix is ill conditioned",
            details={"condition": float(condition), "theta2": theta2},
        )
    rhs = np.array([tau1 - terms.c[0] - terms.g[0], tau2 - terms.c[1] - terms.g[1]])
    alpha = np.linalg.solve(mass, rhs)
    return float(alpha[0]), float(alpha[1])


def with_torques(model: ArmModel, traj: SampledTrajectory) -> SampledTrajectory:
    """Copy of *traj* with the ``tau`` and ``power`` arrays filled."""
    tau = joint_torques(model, *traj.theta, *traj.omega, *traj.alpha)
    power = np.sum(np.abs(tau * traj.omega), axis=0)
    return attr.evolve(traj, tau=tau, power=power)


def energy_report(model: ArmModel, traj: SampledTrajectory) -> EnergyReport:
    """Absolute work, peak power and squared torque integral of a trajectory.

    Work per joint is the trapezoidal integral of ``|tau_j omega_j|``, the
    power series is ``sum_j |tau_j omega_j|``. Torques stored in *traj* are
    used when present, otherwise computed with :func:`joint_torques`.

    Raises:
        InputDataError: with code ``non_uniform_time`` when the sampling is
            not uniform.
    """
    if not traj.is_uniform:
        raise InputDataError(
            "Energy accounting needs a uniform time step",
            code="non_uniform_time",
            details={"dt": traj.dt},
        )
    tau = traj.tau if traj.tau is not None else joint_torques(
        model, *traj.theta, *traj.omega, *traj.alpha
    )
    joint_power = np.abs(tau * traj.omega)
    work = trapezoid(joint_power, traj.t, axis=1)
    effort = trapezoid(tau ** 2, traj.t, axis=1)
    power = np.sum(joint_power, axis=0)
    return EnergyReport(
        work_per_joint=(float(work[0]), float(work[1])),
        total_work=float(work[0] + work[1]),
        peak_power=float(np.max(power)),
        power_series=power,
        effort_per_joint=(float(effort[0]), float(effort[1])),
        total_effort=float(effort[0] + effort[1]),
    )


def _state_derivative(
    model: ArmModel, t: float, y: np.ndarray, torque: Optional[TorqueFunction]
) -> np.ndarray:
    tau1, tau2 = torque(t, y) if torque is not None else (0.0, 0.0)
    alpha1, alpha2 = forward_dynamics(model, y[0], y[1], y[2], y[3], tau1, tau2)
    return np.array([y[2], y[3], alpha1, alpha2])


def simulate(
    model: ArmModel,
    state0: JointState,
    duration: float,
    dt: float,
    torque: Optional[TorqueFunction] = None,
) -> SampledTrajectory:
    """Integrate the arm with classic fixed step Runge-Kutta 4.

    Args:
        model (ArmModel): Arm to simulate.
        state0 (JointState): Initial angles and speeds, accelerations ignored.
        duration (float): Simulated time, s.
        dt (float): Integration step, s. The last step is shortened so the
            grid ends exactly at *duration*.
        torque (TorqueFunction): Applied joint torques, zero when omitted.

    Returns:
        SampledTrajectory: States at every step, with the applied torques and
        the resulting power.
    """
    if not (math.isfinite(duration) and duration > 0):
        raise ModelError("duration must be positive", code="invalid_span", details=duration)
    if not (math.isfinite(dt) and 0 < dt <= duration):
        raise ModelError("dt must be in (0, duration]", code="invalid_span", details=dt)

    times, partial = uniform_grid(0.0, duration, dt)
    y = np.array([state0.theta1, state0.theta2, state0.omega1, state0.omega2], dtype=float)
    states = np.empty((times.size, 4))
    accelerations = np.empty((times.size, 2))
    torques = np.zeros((times.size, 2))
    for index, t in enumerate(times):
        states[index] = y
        if torque is not None:
            torques[index] = torque(t, y)
        k1 = _state_derivative(model, t, y, torque)
        accelerations[index] = k1[2:]
        if index + 1 == times.size:
            break
        step = times[index + 1] - t
        k2 = _state_derivative(model, t + step / 2, y + step / 2 * k1, torque)
        k3 = _state_derivative(model, t + step / 2, y + step / 2 * k2, torque)
        k4 = _state_derivative(model, t + step, y + step * k3, torque)
        y = y + step / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)

    _LOGGER.debug("Simulated %s steps of %s s", times.size - 1, dt)
    omega = states[:, 2:].T
    tau = torques.T
    return SampledTrajectory(
        t=times,
        theta=states[:, :2].T,
        omega=omega,
        alpha=accelerations.T,
        dt=dt,
        tau=tau,
        power=np.sum(np.abs(tau * omega), axis=0),
        partial_last_step=partial,
    )
