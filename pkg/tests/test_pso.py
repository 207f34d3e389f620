"""Tests for the particle swarm."""
import math
import unittest
from typing import List

import numpy as np
import pytest

from biotraj import pso
from biotraj.error import ModelError
from biotraj.model import Bounds, PsoConfig


def _box(dimension: int = 3) -> Bounds:
    return Bounds.cube(-5.0, 5.0, dimension)


class OptimizeTest(unittest.TestCase):
    """Test class."""

    def test_sphere(self) -> None:
        result = pso.optimize(pso.sphere, _box(), PsoConfig(seed=42))
        self.assertLess(result.best_fitness, 1e-4)
        self.assertLess(np.max(np.abs(result.best_position)), 1e-2)
        self.assertEqual("PCG64", result.generator)
        self.assertEqual(42, result.seed)

    def test_same_seed_same_run(self) -> None:
        first = pso.optimize(pso.rastrigin, _box(), PsoConfig(seed=3, iterations=50))
        second = pso.optimize(pso.rastrigin, _box(), PsoConfig(seed=3, iterations=50))
        self.assertEqual(first.best_position.tolist(), second.best_position.tolist())
        self.assertEqual(first.history, second.history)
        self.assertEqual(first.evaluations, second.evaluations)

    def test_other_seed_other_run(self) -> None:
        first = pso.optimize(pso.rastrigin, _box(), PsoConfig(seed=3, iterations=5))
        second = pso.optimize(pso.rastrigin, _box(), PsoConfig(seed=4, iterations=5))
        self.assertNotEqual(first.history, second.history)

    def test_workers_do_not_change_the_run(self) -> None:
        config = PsoConfig(seed=11, iterations=30)
        sequential = pso.optimize(pso.rosenbrock, _box(), config, workers=0)
        threaded = pso.optimize(pso.rosenbrock, _box(), config, workers=4)
        self.assertEqual(sequential.best_position.tolist(), threaded.best_position.tolist())
        self.assertEqual(sequential.history, threaded.history)

    def test_history_never_increases(self) -> None:
        result = pso.optimize(pso.rastrigin, _box(), PsoConfig(seed=5, iterations=100))
        self.assertTrue(np.all(np.diff(result.history) <= 0))
        self.assertEqual(result.best_fitness, result.history[-1])

    def test_evaluation_count(self) -> None:
        config = PsoConfig(swarm_size=40, iterations=10, tolerance=0.0)
        result = pso.optimize(pso.sphere, _box(), config)
        self.assertEqual(40 * 11, result.evaluations)
        self.assertEqual(10, result.iterations)
        self.assertEqual(11, len(result.history))
        self.assertEqual("iterations", result.terminated_by)

    def test_no_iteration(self) -> None:
        result = pso.optimize(pso.sphere, _box(), PsoConfig(swarm_size=5, iterations=0))
        self.assertEqual(5, result.evaluations)
        self.assertEqual(0, result.iterations)

    def test_stagnation(self) -> None:
        result = pso.optimize(lambda x: 1.0, _box(), PsoConfig(stagnation_window=50))
        self.assertEqual("stagnation", result.terminated_by)
        self.assertEqual(50, result.iterations)
        self.assertEqual(40 * 51, result.evaluations)

    def test_non_finite_counts_as_infinity(self) -> None:
        def objective(x: np.ndarray) -> float:
            return math.nan if x[0] > 0 else pso.sphere(x)

        result = pso.optimize(objective, _box(2), PsoConfig(iterations=50))
        self.assertTrue(math.isfinite(result.best_fitness))
        self.assertLessEqual(result.best_position[0], 0.0)

    def test_positions_stay_in_bounds(self) -> None:
        bounds = Bounds([0.0, -1.0], [1.0, 3.0])
        seen: List[np.ndarray] = []

        def objective(x: np.ndarray) -> float:
            seen.append(x)
            return -float(np.sum(x))

        result = pso.optimize(objective, bounds, PsoConfig(iterations=30))
        self.assertTrue(all(bounds.contains(x) for x in seen))
        self.assertLess(result.best_fitness, -3.9)

    def test_dimension_mismatch(self) -> None:
        with self.assertRaises(ModelError) as context:
            pso.optimize(pso.sphere, _box(3), dimension=5)
        self.assertEqual("dimension_mismatch", context.exception.code)

    def test_objective_rejects_dimension(self) -> None:
        with self.assertRaises(ModelError) as context:
            pso.optimize(lambda x: float(x[4]), _box(3))
        self.assertEqual("dimension_mismatch", context.exception.code)


@pytest.mark.parametrize(
    "name, minimum",
    [("sphere", np.zeros(4)), ("rosenbrock", np.ones(4)), ("rastrigin", np.zeros(4))],
)
def test_benchmark_minimum(name: str, minimum: np.ndarray) -> None:
    function = pso.BENCHMARKS[name]
    assert function(minimum) == pytest.approx(0.0, abs=1e-12)
    assert function(minimum + 0.1) > 0.0
    low, high = pso.BENCHMARK_BOUNDS[name]
    assert low < minimum[0] < high


@pytest.mark.parametrize(
    "values",
    [
        {"swarm_size": 1},
        {"iterations": -1},
        {"inertia": 1.0},
        {"cognitive": 0.0},
        {"social": -1.0},
        {"seed": -1},
        {"tolerance": -1e-3},
        {"stagnation_window": 0},
    ],
)
def test_invalid_config(values: dict) -> None:
    with pytest.raises(ValueError):
        PsoConfig(**values)


class BoundsTest(unittest.TestCase):
    """Test class."""

    def test_from_pairs(self) -> None:
        bounds = Bounds.from_pairs([(0, 1), (-2, 2)])
        self.assertEqual((0.0, -2.0), bounds.lower)
        self.assertEqual((1.0, 2.0), bounds.upper)
        self.assertEqual(2, bounds.dimension)
        self.assertEqual([1.0, 4.0], bounds.width.tolist())

    def test_contains_edges(self) -> None:
        bounds = Bounds.cube(0.0, 1.0, 2)
        self.assertTrue(bounds.contains([0.0, 1.0]))
        self.assertFalse(bounds.contains([0.0, 1.1]))
        self.assertFalse(bounds.contains([0.5]))

    def test_invalid(self) -> None:
        with self.assertRaises(ValueError):
            Bounds([1.0], [0.0])
        with self.assertRaises(ValueError):
            Bounds([], [])
        with self.assertRaises(ValueError):
            Bounds([0.0, 0.0], [1.0])
