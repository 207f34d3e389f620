"""Planning of a lift placing the elbow velocity peak in the weakest region."""
import functools
import logging
import math
import os
from typing import Any, Dict, Optional, Sequence

import numpy as np
from scipy.integrate import trapezoid
from scipy.optimize import brentq

from . import defaults, dynamics, phases, pso, quintic, report
from .csvio import PathLike
from .error import InfeasiblePlanError, ModelError, model_errors
from .model import (
    BoundaryCondition,
    Bounds,
    Limits,
    PiecewiseTrajectory,
    PlanEvaluation,
    PlanningProblem,
    PlanResult,
    PsoConfig,
    SampledTrajectory,
    mapper,
)
from .model.constants import DECISION_NAMES, ELBOW, SHOULDER
from .utils import reduction_pct

_LOGGER = logging.getLogger(__name__)


def thread_count() -> int:
    """Fitness evaluation threads from the environment, 0 when unset or
    invalid."""
    raw = os.environ.get(defaults.THREADS_ENV, "0")
    try:
        count = int(raw)
    except ValueError:
        _LOGGER.warning("Ignoring %s=%r, not an integer", defaults.THREADS_ENV, raw)
        return 0
    return max(count, 0)


def _progress(problem: PlanningProblem) -> float:
    start, end = problem.start_deg[ELBOW], problem.end_deg[ELBOW]
    progress = (problem.phase.target_peak_angle - start) / (end - start)
    if not 0 < progress < 1:
        raise ModelError(
            "Target peak angle is not between the start and end elbow angles",
            code="invalid_model",
            details={"target": problem.phase.target_peak_angle, "start": start, "end": end},
        )
    return progress


def _sample(problem: PlanningProblem, traj: PiecewiseTrajectory) -> SampledTrajectory:
    return dynamics.with_torques(problem.arm, quintic.sample(traj, problem.dt))


def decision_bounds(problem: PlanningProblem) -> Bounds:
    """Search box of the decision vector: via time fraction, then via speeds
    and accelerations within the joint limits."""
    omega, alpha = problem.limits.omega_max, problem.limits.alpha_max
    low, high = defaults.VIA_FRACTION_BOUNDS
    return Bounds.from_pairs([(low, high)] + [(-limit, limit) for limit in (*omega, *alpha)])


def standard_plan(problem: PlanningProblem) -> SampledTrajectory:
    """Rest to rest quintic on every joint, sampled with torques."""
    start, end = problem.start_rad, problem.end_rad
    traj = quintic.stack(
        [quintic.rest_to_rest(start[joint], end[joint], problem.duration) for joint in (0, 1)]
    )
    return _sample(problem, traj)


def standard_decision(problem: PlanningProblem) -> np.ndarray:
    """Decision vector decoding to the standard plan.

    Both joints of the standard plan share the normalized profile
    ``10s³ - 15s⁴ + 6s⁵``, so it passes through the target elbow angle and
    the matching shoulder angle at the same time.
    """
    progress = _progress(problem)
    s = brentq(lambda v: v ** 3 * (10 - 15 * v + 6 * v ** 2) - progress, 0.0, 1.0, xtol=1e-15)
    speed = 30 * s ** 2 * (1 - s) ** 2 / problem.duration
    accel = 60 * s * (1 - s) * (1 - 2 * s) / problem.duration ** 2
    distance = np.array(problem.end_rad) - np.array(problem.start_rad)
    return np.array([s, *(distance * speed), *(distance * accel)])


@model_errors(code="invalid_decision")
def decision_decode(problem: PlanningProblem, x: Sequence[float]) -> PiecewiseTrajectory:
    """Build the two segment plan of a decision vector.

    The via elbow angle is the target peak angle; the via shoulder angle
    sits at the same share of its displacement as the elbow.

    Args:
        problem (PlanningProblem): Problem to plan.
        x (Sequence[float]): ``[via_fraction, omega1, omega2, alpha1, alpha2]``
            with speeds in rad/s and accelerations in rad/s².

    Raises:
        ModelError: with code ``dimension_mismatch`` for a vector that is
            not 5 long, ``invalid_decision`` when a component is out of its
            bounds.
    """
    vector = np.asarray(x, dtype=float)
    if vector.shape != (len(DECISION_NAMES),):
        raise ModelError(
            "Decision vector must have 5 components",
            code="dimension_mismatch",
            details=vector.shape,
        )
    bounds = decision_bounds(problem)
    if not bounds.contains(vector):
        raise ModelError(
            "Decision vector outside its bounds",
            code="invalid_decision",
            details=dict(zip(DECISION_NAMES, vector.tolist())),
        )

    progress = _progress(problem)
    start, end = problem.start_rad, problem.end_rad
    t_via = vector[0] * problem.duration
    chains = []
    for joint in (SHOULDER, ELBOW):
        via = BoundaryCondition(
            theta=start[joint] + progress * (end[joint] - start[joint]),
            omega=vector[1 + joint],
            alpha=vector[3 + joint],
        )
        chains.append(
            quintic.two_segment_via(
                BoundaryCondition(start[joint]),
                via,
                t_via,
                BoundaryCondition(end[joint]),
                problem.duration,
            )
        )
    return quintic.stack(chains)


def limit_violation(traj: SampledTrajectory, limits: Limits) -> float:
    """Integrated overshoot of the speed and acceleration limits."""
    omega_max = np.asarray(limits.omega_max)[:, None]
    alpha_max = np.asarray(limits.alpha_max)[:, None]
    overshoot = np.clip(np.abs(traj.omega) - omega_max, 0.0, None) + np.clip(
        np.abs(traj.alpha) - alpha_max, 0.0, None
    )
    return float(np.sum(trapezoid(overshoot, traj.t, axis=1)))


def evaluate_decision(problem: PlanningProblem, x: Sequence[float]) -> PlanEvaluation:
    """Decode, sample and cost a decision vector.

    The cost is::

        w_energy * work + w_effort * effort + w_peak_power * peak_power
        + w_peak * max(0, deviation - deadband) + w_limit * violation

    and infinity whenever it is not finite.
    """
    traj = _sample(problem, decision_decode(problem, x))
    energy = dynamics.energy_report(problem.arm, traj)
    peak_angle, deviation = phases.check_peak_placement(traj, problem.phase)
    violation = limit_violation(traj, problem.limits)
    weights = problem.weights
    cost = (
        weights.w_energy * energy.total_work
        + weights.w_effort * energy.total_effort
        + weights.w_peak_power * energy.peak_power
        + weights.w_peak * max(0.0, deviation - defaults.PEAK_DEADBAND_DEG)
        + weights.w_limit * violation
    )
    return PlanEvaluation(
        trajectory=traj,
        energy=energy,
        peak_angle=peak_angle,
        deviation=deviation,
        violation=violation,
        cost=cost if math.isfinite(cost) else math.inf,
    )


def objective(problem: PlanningProblem, x: Sequence[float]) -> float:
    """Cost of a decision vector, see :func:`evaluate_decision`."""
    return evaluate_decision(problem, x).cost


def optimize_plan(
    problem: PlanningProblem,
    pso_config: PsoConfig = PsoConfig(),
    workers: Optional[int] = None,
    strict: bool = False,
) -> PlanResult:
    """Search the via point plan of least cost and compare it to the
    standard plan.

    The standard plan is itself a via point plan, see
    :func:`standard_decision`; it is kept when the swarm finds nothing
    cheaper.

    Args:
        problem (PlanningProblem): Problem to plan.
        pso_config (PsoConfig): Swarm settings, the seed makes runs repeatable.
        workers (int): Fitness threads, read from ``BIOTRAJ_THREADS`` when
            omitted.
        strict (bool): Raise instead of flagging an infeasible result.

    Raises:
        InfeasiblePlanError: in strict mode, when the best plan violates the
            limits beyond :data:`biotraj.defaults.LIMIT_TOLERANCE`. The
            result is in ``details``.
    """
    workers = thread_count() if workers is None else workers
    standard = standard_plan(problem)
    standard_energy = dynamics.energy_report(problem.arm, standard)
    standard_angle, _ = phases.check_peak_placement(standard, problem.phase)

    bounds = decision_bounds(problem)
    outcome = pso.optimize(
        functools.partial(objective, problem),
        bounds,
        pso_config,
        workers=workers,
        dimension=len(DECISION_NAMES),
    )
    decision = outcome.best_position
    best = evaluate_decision(problem, decision)
    fallback = standard_decision(problem)
    if bounds.contains(fallback):
        candidate = evaluate_decision(problem, fallback)
        if candidate.cost < best.cost:
            _LOGGER.info("Standard plan is cheaper than the swarm best, keeping it")
            decision, best = fallback, candidate

    optimized_energy = best.energy
    result = PlanResult(
        standard=standard,
        standard_energy=standard_energy,
        optimized=best.trajectory,
        optimized_energy=optimized_energy,
        work_reduction_pct=reduction_pct(standard_energy.total_work, optimized_energy.total_work),
        peak_power_reduction_pct=reduction_pct(
            standard_energy.peak_power, optimized_energy.peak_power
        ),
        effort_reduction_pct=reduction_pct(
            standard_energy.total_effort, optimized_energy.total_effort
        ),
        standard_peak_angle=standard_angle,
        peak_angle_achieved=best.peak_angle,
        peak_angle_deviation=best.deviation,
        violation=best.violation,
        infeasible=best.violation > defaults.LIMIT_TOLERANCE,
        decision=tuple(float(v) for v in decision),
        pso=outcome,
    )
    _LOGGER.info(
        "Plan: work %.2f%%, peak power %.2f%%, effort %.2f%%, peak at %.2f deg",
        result.work_reduction_pct,
        result.peak_power_reduction_pct,
        result.effort_reduction_pct,
        result.peak_angle_achieved,
    )
    if result.infeasible:
        _LOGGER.warning("Best plan violates the joint limits by %.6g", result.violation)
        if strict:
            raise InfeasiblePlanError("Best plan violates the joint limits", details=result)
    return result


class BioPlanner:
    """Convenient entry point to plan a lift.

    The planner holds a :class:`~biotraj.model.PlanningProblem` and the
    swarm settings, and exposes the planning operations on them.

    Args:
        problem (PlanningProblem): Problem to plan, the benchmark when omitted.
        pso_config (PsoConfig): Swarm settings.
        workers (int): Fitness evaluation threads, ``BIOTRAJ_THREADS`` when
            omitted.
    """

    def __init__(
        self,
        problem: Optional[PlanningProblem] = None,
        pso_config: Optional[PsoConfig] = None,
        workers: Optional[int] = None,
    ) -> None:
        self.problem = problem or PlanningProblem()
        self.pso_config = pso_config or PsoConfig()
        self.workers = workers

    @classmethod
    def from_config(cls, json: Dict[str, Any], seed: Optional[int] = None) -> "BioPlanner":
        """Create a planner from a JSON problem configuration.

        Args:
            json (dict): Configuration, see :data:`biotraj.schemas.PROBLEM`.
            seed (int): Overrides the configured swarm seed.
        """
        problem = mapper.map_problem(json)
        return cls(problem, mapper.map_pso_config(json.get("pso"), seed))

    def standard_plan(self) -> SampledTrajectory:
        """Get the rest to rest plan."""
        return standard_plan(self.problem)

    def decode(self, x: Sequence[float]) -> PiecewiseTrajectory:
        """Get the plan of a decision vector."""
        return decision_decode(self.problem, x)

    def objective(self, x: Sequence[float]) -> float:
        """Get the cost of a decision vector."""
        return objective(self.problem, x)

    def optimize(self, strict: bool = False) -> PlanResult:
        """Run the swarm and compare the best plan to the standard one."""
        return optimize_plan(self.problem, self.pso_config, self.workers, strict)

    def compare_report(
        self, result: PlanResult, out_dir: Optional[PathLike] = None
    ) -> report.Report:
        """Render a result of this planner, see :func:`biotraj.report.compare_report`."""
        return report.compare_report(result, out_dir, self.problem.arm)
