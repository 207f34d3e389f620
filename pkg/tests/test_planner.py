"""Tests for the bio-inspired planner."""
import math
import unittest

import numpy as np
import pytest

from biotraj import dynamics, planner, quintic
from biotraj.error import InfeasiblePlanError, ModelError
from biotraj.model import Limits, PhaseSpec, PlanningProblem, PlanResult, PsoConfig
from biotraj.utils import reduction_pct
from tests.conftest import benchmark_config, benchmark_problem

SMALL_SWARM = PsoConfig(swarm_size=10, iterations=5, seed=7)


def _centered_problem() -> PlanningProblem:
    return PlanningProblem(phase=PhaseSpec(target_peak_angle=75.0))


class StandardPlanTest(unittest.TestCase):
    """Test class."""

    def test_peak_at_mid_time(self) -> None:
        traj = planner.standard_plan(PlanningProblem())
        time, index = quintic.peak_velocity(traj, 1)
        self.assertAlmostEqual(1.5, time, places=9)
        self.assertAlmostEqual(75.0, math.degrees(traj.theta[1, index]), places=6)
        self.assertEqual(3001, traj.size)
        self.assertTrue(traj.has_torques)

    def test_energy(self) -> None:
        problem = PlanningProblem()
        report = dynamics.energy_report(problem.arm, planner.standard_plan(problem))
        self.assertAlmostEqual(51.6056, report.total_work, delta=0.1)
        self.assertAlmostEqual(47.646, report.peak_power, delta=0.2)
        self.assertAlmostEqual(1827.08, report.total_effort, delta=5.0)

    def test_within_benchmark_limits(self) -> None:
        problem = PlanningProblem()
        traj = planner.standard_plan(problem)
        self.assertEqual(0.0, planner.limit_violation(traj, problem.limits))
        self.assertLess(np.max(np.abs(traj.omega[1])), 1.64)


class DecisionTest(unittest.TestCase):
    """Test class."""

    def test_bounds(self) -> None:
        bounds = planner.decision_bounds(PlanningProblem())
        self.assertEqual((0.15, -3.0, -3.0, -10.0, -10.0), bounds.lower)
        self.assertEqual((0.85, 3.0, 3.0, 10.0, 10.0), bounds.upper)

    def test_standard_decision_at_mid_point(self) -> None:
        problem = _centered_problem()
        decision = planner.standard_decision(problem)
        distance = np.radians([30.0, 150.0])
        self.assertAlmostEqual(0.5, decision[0], places=12)
        self.assertTrue(np.allclose(distance * 1.875 / 3.0, decision[1:3]))
        self.assertTrue(np.allclose(0.0, decision[3:], atol=1e-9))

    def test_standard_decision_at_target(self) -> None:
        decision = planner.standard_decision(PlanningProblem())
        self.assertAlmostEqual(0.4535, decision[0], delta=1e-3)
        self.assertAlmostEqual(1.608, decision[2], delta=1e-2)

    def test_decode_standard_decision(self) -> None:
        for problem in (_centered_problem(), PlanningProblem()):
            decoded = quintic.sample(
                planner.decision_decode(problem, planner.standard_decision(problem)), problem.dt
            )
            standard = planner.standard_plan(problem)
            self.assertLess(np.max(np.abs(decoded.theta - standard.theta)), 1e-9)
            self.assertLess(np.max(np.abs(decoded.omega - standard.omega)), 1e-9)
            self.assertLess(np.max(np.abs(decoded.alpha - standard.alpha)), 1e-8)

    def test_decode_passes_through_via(self) -> None:
        problem = PlanningProblem()
        traj = planner.decision_decode(problem, [0.4, 0.3, 1.9, 0.1, -0.5])
        first, second = traj.joints[1]
        self.assertAlmostEqual(1.2, first.tf)
        theta, omega, alpha = quintic.evaluate(first, 1.2)
        self.assertAlmostEqual(math.radians(62.0), theta, places=9)
        self.assertAlmostEqual(1.9, omega, places=9)
        self.assertAlmostEqual(-0.5, alpha, places=9)
        self.assertLess(quintic.junction_residual(traj), 1e-9)
        shoulder = quintic.evaluate(traj.joints[0][0], 1.2)[0]
        self.assertAlmostEqual(math.radians(30.0 * 62.0 / 150.0), shoulder, places=9)
        self.assertEqual(3.0, second.tf)

    def test_decision_outside_bounds(self) -> None:
        with self.assertRaises(ModelError) as context:
            planner.decision_decode(PlanningProblem(), [0.95, 0.0, 0.0, 0.0, 0.0])
        self.assertEqual("invalid_decision", context.exception.code)

    def test_decision_dimension(self) -> None:
        with self.assertRaises(ModelError) as context:
            planner.decision_decode(PlanningProblem(), [0.5, 0.0, 0.0])
        self.assertEqual("dimension_mismatch", context.exception.code)

    def test_target_outside_motion(self) -> None:
        problem = PlanningProblem(start_deg=(0.0, 70.0))
        with self.assertRaises(ModelError) as context:
            planner.standard_decision(problem)
        self.assertEqual("invalid_model", context.exception.code)


class ObjectiveTest(unittest.TestCase):
    """Test class."""

    def test_default_weights_cost_is_work(self) -> None:
        problem = _centered_problem()
        decision = planner.standard_decision(problem)
        work = dynamics.energy_report(problem.arm, planner.standard_plan(problem)).total_work
        self.assertAlmostEqual(work, planner.objective(problem, decision), places=6)

    def test_peak_penalty(self) -> None:
        problem = PlanningProblem()
        evaluation = planner.evaluate_decision(problem, planner.standard_decision(problem))
        self.assertAlmostEqual(13.0, evaluation.deviation, delta=0.1)
        expected = evaluation.energy.total_work + 10.0 * (evaluation.deviation - 2.0)
        self.assertAlmostEqual(expected, evaluation.cost, places=6)

    def test_limit_penalty(self) -> None:
        problem = PlanningProblem(limits=Limits(omega_max=(3.0, 1.0)))
        evaluation = planner.evaluate_decision(problem, [0.5, 0.0, 0.0, 0.0, 0.0])
        self.assertGreater(evaluation.violation, 0.0)
        self.assertGreaterEqual(evaluation.cost, 1e3 * evaluation.violation)

    def test_planner_facade(self) -> None:
        bio = planner.BioPlanner(_centered_problem())
        decision = planner.standard_decision(bio.problem)
        self.assertEqual(planner.objective(bio.problem, decision), bio.objective(decision))
        self.assertEqual(2, len(bio.decode(decision).joints))
        self.assertEqual(3001, bio.standard_plan().size)


def test_benchmark_plan(benchmark_result: PlanResult) -> None:
    result = benchmark_result
    assert not result.infeasible
    assert result.violation <= 1e-3
    assert result.optimized_energy.peak_power < result.standard_energy.peak_power
    assert result.peak_angle_achieved == pytest.approx(62.0, abs=5.0)
    assert 40.0 <= result.peak_angle_achieved < 90.0
    assert result.standard_peak_angle == pytest.approx(75.0, abs=0.1)
    assert result.work_reduction_pct >= 0.0
    assert result.optimized_energy.total_work <= result.standard_energy.total_work
    assert result.optimized_energy.total_work == pytest.approx(51.60, abs=0.02)
    # no rest to rest lift does less work than the potential energy it adds
    assert result.optimized_energy.total_work >= 51.5


def test_benchmark_plan_is_rest_to_rest(benchmark_result: PlanResult) -> None:
    traj = benchmark_result.optimized
    assert np.allclose(traj.theta[:, 0], [0.0, 0.0], atol=1e-9)
    assert np.allclose(traj.theta[:, -1], np.radians([30.0, 150.0]), atol=1e-9)
    assert np.max(np.abs(traj.omega[:, [0, -1]])) < 1e-6
    assert np.max(np.abs(traj.alpha[:, [0, -1]])) < 1e-6


def test_benchmark_reductions(benchmark_result: PlanResult) -> None:
    result = benchmark_result
    standard, optimized = result.standard_energy, result.optimized_energy
    assert result.work_reduction_pct == reduction_pct(standard.total_work, optimized.total_work)
    assert result.effort_reduction_pct == reduction_pct(
        standard.total_effort, optimized.total_effort
    )
    assert planner.decision_bounds(benchmark_problem()).contains(result.decision)
    assert result.pso.seed == 42
    assert result.pso.generator == "PCG64"


def test_infeasible_plan_flagged() -> None:
    problem = PlanningProblem(limits=Limits(omega_max=(3.0, 0.5)))
    result = planner.optimize_plan(problem, SMALL_SWARM, workers=0)
    assert result.infeasible
    assert result.violation > 1e-3


def test_infeasible_plan_strict() -> None:
    problem = PlanningProblem(limits=Limits(omega_max=(3.0, 0.5)))
    with pytest.raises(InfeasiblePlanError) as info:
        planner.optimize_plan(problem, SMALL_SWARM, workers=0, strict=True)
    assert info.value.code == "infeasible_plan"
    assert info.value.details.infeasible


def test_optimize_keeps_standard_when_cheaper() -> None:
    problem = _centered_problem()
    result = planner.optimize_plan(problem, PsoConfig(swarm_size=5, iterations=0), workers=0)
    assert result.optimized_energy.total_work <= result.standard_energy.total_work + 1e-9


@pytest.mark.parametrize("raw, expected", [("3", 3), ("abc", 0), ("-2", 0), (None, 0)])
def test_thread_count(monkeypatch: pytest.MonkeyPatch, raw: str, expected: int) -> None:
    if raw is None:
        monkeypatch.delenv("BIOTRAJ_THREADS", raising=False)
    else:
        monkeypatch.setenv("BIOTRAJ_THREADS", raw)
    assert planner.thread_count() == expected


def test_from_config() -> None:
    bio = planner.BioPlanner.from_config(benchmark_config())
    assert bio.pso_config.seed == 42
    assert bio.pso_config.swarm_size == 40
    assert bio.problem.weights.w_energy == 10.0
    assert bio.problem.weights.w_effort == 0.02
    assert planner.BioPlanner.from_config(benchmark_config(), seed=7).pso_config.seed == 7
