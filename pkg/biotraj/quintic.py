"""Quintic polynomial joint trajectories."""
import logging
import math
from typing import Sequence, Tuple

import numpy as np

from .error import ModelError, model_errors
from .model import (
    BoundaryCondition,
    PiecewiseTrajectory,
    QuinticSegment,
    SampledTrajectory,
)
from .utils import uniform_grid

_LOGGER = logging.getLogger(__name__)

_SPAN_TOLERANCE = 1e-12


def _boundary_matrix(duration: float) -> np.ndarray:
    rows = []
    for s in (0.0, duration):
        rows.append([s ** k for k in range(6)])
        rows.append([k * s ** (k - 1) if k >= 1 else 0.0 for k in range(6)])
        rows.append([k * (k - 1) * s ** (k - 2) if k >= 2 else 0.0 for k in range(6)])
    # order rows as theta0, omega0, alpha0, thetaf, omegaf, alphaf
    return np.array(rows)


@model_errors()
def solve_quintic(
    bc0: BoundaryCondition, bcf: BoundaryCondition, t0: float, tf: float
) -> QuinticSegment:
    """Get the unique quintic joining two boundary conditions.

    The six conditions form a linear system, solved with LU and partial
    pivoting.

    Args:
        bc0 (BoundaryCondition): State at *t0*.
        bcf (BoundaryCondition): State at *tf*.
        t0 (float): Start time, s.
        tf (float): End time, s.

    Raises:
        ModelError: with code ``invalid_span`` when ``tf <= t0`` or a time is
            not finite.
    """
    if not (math.isfinite(t0) and math.isfinite(tf) and tf > t0):
        raise ModelError(
            "Quintic span must satisfy tf > t0", code="invalid_span", details=(t0, tf)
        )
    rhs = np.array([bc0.theta, bc0.omega, bc0.alpha, bcf.theta, bcf.omega, bcf.alpha])
    coefficients = np.linalg.solve(_boundary_matrix(tf - t0), rhs)
    return QuinticSegment(t0=t0, tf=tf, coefficients=tuple(float(c) for c in coefficients))


def polyval(segment: QuinticSegment, t):  # type: ignore
    """Angle, speed and acceleration of *segment* at *t*, arrays accepted.

    No span check.
    """
    d0, d1, d2, d3, d4, d5 = segment.coefficients
    s = np.asarray(t, dtype=float) - segment.t0
    theta = d0 + s * (d1 + s * (d2 + s * (d3 + s * (d4 + s * d5))))
    omega = d1 + s * (2 * d2 + s * (3 * d3 + s * (4 * d4 + s * 5 * d5)))
    alpha = 2 * d2 + s * (6 * d3 + s * (12 * d4 + s * 20 * d5))
    return theta, omega, alpha


def evaluate(segment: QuinticSegment, t: float) -> Tuple[float, float, float]:
    """Evaluate a segment.

    Returns:
        (theta, omega, alpha) at *t*.

    Raises:
        ModelError: with code ``out_of_span`` when *t* is outside the segment.
    """
    if not segment.t0 - _SPAN_TOLERANCE <= t <= segment.tf + _SPAN_TOLERANCE:
        raise ModelError(
            "Time outside the segment span",
            code="out_of_span",
            details={"t": t, "t0": segment.t0, "tf": segment.tf},
        )
    theta, omega, alpha = polyval(segment, t)
    return float(theta), float(omega), float(alpha)


def boundary_state(segment: QuinticSegment, at_end: bool = False) -> BoundaryCondition:
    """State of a segment at its start, or at its end."""
    theta, omega, alpha = evaluate(segment, segment.tf if at_end else segment.t0)
    return BoundaryCondition(theta, omega, alpha)


def rest_to_rest(
    theta0: float, thetaf: float, duration: float, t0: float = 0.0
) -> PiecewiseTrajectory:
    """Single joint trajectory of one quintic starting and ending at rest."""
    segment = solve_quintic(
        BoundaryCondition(theta0), BoundaryCondition(thetaf), t0, t0 + duration
    )
    return PiecewiseTrajectory(joints=((segment,),))


@model_errors()
def two_segment_via(
    bc0: BoundaryCondition,
    via: BoundaryCondition,
    t_via: float,
    bcf: BoundaryCondition,
    duration: float,
    t0: float = 0.0,
) -> PiecewiseTrajectory:
    """Single joint trajectory passing through a full state at *t_via*.

    Two quintics share the via state, so angle, speed and acceleration are
    continuous at the junction.

    Args:
        bc0 (BoundaryCondition): State at *t0*.
        via (BoundaryCondition): State at *t_via*.
        t_via (float): Junction time, s.
        bcf (BoundaryCondition): State at ``t0 + duration``.
        duration (float): Total duration, s.
        t0 (float): Start time, s.

    Raises:
        ModelError: with code ``invalid_span`` when *t_via* is not strictly
            inside the span.
    """
    tf = t0 + duration
    if not (math.isfinite(t_via) and t0 < t_via < tf):
        raise ModelError(
            "Via time must lie strictly inside the span",
            code="invalid_span",
            details={"t_via": t_via, "t0": t0, "tf": tf},
        )
    first = solve_quintic(bc0, via, t0, t_via)
    second = solve_quintic(via, bcf, t_via, tf)
    return PiecewiseTrajectory(joints=((first, second),))


def stack(trajectories: Sequence[PiecewiseTrajectory]) -> PiecewiseTrajectory:
    """Gather single joint trajectories into one multi joint trajectory."""
    chains = tuple(chain for traj in trajectories for chain in traj.joints)
    return PiecewiseTrajectory(joints=chains)


def junction_residual(traj: PiecewiseTrajectory) -> float:
    """Largest mismatch of angle, speed or acceleration between consecutive
    segments, 0 for single segment chains."""
    residual = 0.0
    for chain in traj.joints:
        for left, right in zip(chain, chain[1:]):
            end = np.array(polyval(left, left.tf))
            start = np.array(polyval(right, right.t0))
            residual = max(residual, float(np.max(np.abs(end - start))))
    return residual


def sample(traj: PiecewiseTrajectory, dt: float) -> SampledTrajectory:
    """Sample a trajectory on a grid anchored on both endpoints.

    A sample on a junction is taken from the later segment.

    Raises:
        ModelError: with code ``invalid_span`` when *dt* is not positive or
            not shorter than the span.
    """
    if not (math.isfinite(dt) and 0 < dt < traj.duration):
        raise ModelError(
            "Sampling step must be positive and shorter than the span",
            code="invalid_span",
            details={"dt": dt, "span": traj.duration},
        )
    times, partial = uniform_grid(traj.t0, traj.tf, dt)
    if partial:
        _LOGGER.warning(
            "Span %s s is not a multiple of dt=%s s, last step is shorter", traj.duration, dt
        )
    shape = (len(traj.joints), times.size)
    theta, omega, alpha = np.empty(shape), np.empty(shape), np.empty(shape)
    for joint, chain in enumerate(traj.joints):
        index = np.searchsorted([segment.t0 for segment in chain], times, side="right") - 1
        index = np.clip(index, 0, len(chain) - 1)
        for number, segment in enumerate(chain):
            mask = index == number
            theta[joint, mask], omega[joint, mask], alpha[joint, mask] = polyval(
                segment, times[mask]
            )
    return SampledTrajectory(
        t=times, theta=theta, omega=omega, alpha=alpha, dt=dt, partial_last_step=partial
    )


def peak_velocity(traj: SampledTrajectory, joint: int) -> Tuple[float, int]:
    """Time and sample index of the largest absolute speed of a joint.

    Ties resolve to the earliest sample.
    """
    if not 0 <= joint < traj.joints:
        raise ModelError("Unknown joint", code="dimension_mismatch", details=joint)
    index = int(np.argmax(np.abs(traj.omega[joint])))
    return float(traj.t[index]), index
