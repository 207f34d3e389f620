"""Global best particle swarm optimizer on a box.

Runs are reproducible: the swarm is driven by a numpy ``PCG64`` generator
seeded from :attr:`PsoConfig.seed`, random draws happen in a fixed order and
fitness values are gathered in particle order whatever the thread pool does.
"""
import logging
import math
from concurrent.futures import Executor, ThreadPoolExecutor
from typing import Callable, Dict, Optional, Sequence

import numpy as np

from . import defaults
from .error import ModelError
from .model import Bounds, OptResult, PsoConfig

_LOGGER = logging.getLogger(__name__)

Objective = Callable[[np.ndarray], float]


def _fitness(objective: Objective, position: np.ndarray) -> float:
    value = float(objective(position))
    return value if math.isfinite(value) else math.inf


def _evaluate(
    objective: Objective, positions: np.ndarray, executor: Optional[Executor]
) -> np.ndarray:
    rows = [row.copy() for row in positions]
    if executor is None:
        values = [_fitness(objective, row) for row in rows]
    else:
        values = list(executor.map(lambda row: _fitness(objective, row), rows))
    return np.array(values, dtype=float)


def _first_evaluation(
    objective: Objective, positions: np.ndarray, executor: Optional[Executor]
) -> np.ndarray:
    try:
        return _evaluate(objective, positions, executor)
    except (TypeError, ValueError, IndexError) as exc:
        raise ModelError(
            "Objective cannot be evaluated on a vector of the bounds dimension",
            code="dimension_mismatch",
            details={"dimension": positions.shape[1], "error": str(exc)},
        ) from exc


def optimize(
    objective: Objective,
    bounds: Bounds,
    config: PsoConfig = PsoConfig(),
    workers: int = 0,
    dimension: Optional[int] = None,
) -> OptResult:
    """Minimize *objective* over *bounds*.

    Velocities follow ``v = w v + c1 r1 (pbest - x) + c2 r2 (gbest - x)`` and
    are clamped to :data:`biotraj.defaults.PSO_VELOCITY_FRACTION` of the box
    width. Positions leaving the box are clamped back and their velocity
    zeroed on the clamped dimension. Non finite fitness counts as infinity.

    The run stops after ``config.iterations`` iterations, or once the best
    fitness improved by less than ``config.tolerance`` over the last
    ``config.stagnation_window`` iterations.

    Args:
        objective (Objective): Pure function of a position vector.
        bounds (Bounds): Search box.
        config (PsoConfig): Swarm settings.
        workers (int): Threads evaluating fitness, 0 evaluates sequentially.
        dimension (int): Expected arity of *objective*, when known.

    Returns:
        OptResult: Best position and fitness, with the best fitness history.

    Raises:
        ModelError: with code ``dimension_mismatch`` when *dimension* differs
            from the bounds, or the objective rejects a vector of that size.
    """
    if dimension is not None and dimension != bounds.dimension:
        raise ModelError(
            "Objective arity does not match the bounds",
            code="dimension_mismatch",
            details={"objective": dimension, "bounds": bounds.dimension},
        )
    lower = np.asarray(bounds.lower)
    upper = np.asarray(bounds.upper)
    vmax = defaults.PSO_VELOCITY_FRACTION * bounds.width
    size, dims = config.swarm_size, bounds.dimension

    rng = np.random.Generator(np.random.PCG64(config.seed))
    positions = lower + rng.random((size, dims)) * bounds.width
    velocities = (2.0 * rng.random((size, dims)) - 1.0) * vmax

    executor = ThreadPoolExecutor(max_workers=workers) if workers > 0 else None
    _LOGGER.info(
        "Starting swarm of %s particles in %s dimensions, seed %s, %s workers",
        size,
        dims,
        config.seed,
        workers,
    )
    try:
        fitness = _first_evaluation(objective, positions, executor)
        evaluations = size
        best_positions, best_fitness = positions.copy(), fitness.copy()
        leader = int(np.argmin(best_fitness))
        swarm_position, swarm_fitness = best_positions[leader].copy(), float(best_fitness[leader])
        history = [swarm_fitness]
        terminated_by = "iterations"
        iteration = 0

        for iteration in range(1, config.iterations + 1):
            r1 = rng.random((size, dims))
            r2 = rng.random((size, dims))
            velocities = (
                config.inertia * velocities
                + config.cognitive * r1 * (best_positions - positions)
                + config.social * r2 * (swarm_position - positions)
            )
            velocities = np.clip(velocities, -vmax, vmax)
            positions = positions + velocities
            clamped = (positions < lower) | (positions > upper)
            positions = np.clip(positions, lower, upper)
            velocities[clamped] = 0.0

            fitness = _evaluate(objective, positions, executor)
            evaluations += size
            improved = fitness < best_fitness
            best_positions[improved] = positions[improved]
            best_fitness[improved] = fitness[improved]
            leader = int(np.argmin(best_fitness))
            if best_fitness[leader] < swarm_fitness:
                swarm_position, swarm_fitness = best_positions[leader].copy(), float(
                    best_fitness[leader]
                )
            history.append(swarm_fitness)
            _LOGGER.debug("Iteration %s, best fitness %.10g", iteration, swarm_fitness)

            window = config.stagnation_window
            if len(history) > window and history[-window - 1] - history[-1] < config.tolerance:
                terminated_by = "stagnation"
                break
    finally:
        if executor is not None:
            executor.shutdown()

    _LOGGER.info(
        "Swarm stopped by %s after %s iterations, %s evaluations, best fitness %.10g",
        terminated_by,
        iteration,
        evaluations,
        swarm_fitness,
    )
    return OptResult(
        best_position=swarm_position,
        best_fitness=swarm_fitness,
        history=history,
        evaluations=evaluations,
        terminated_by=terminated_by,
        iterations=iteration,
        generator=defaults.PSO_GENERATOR,
        seed=config.seed,
    )


def sphere(x: np.ndarray) -> float:
    """Sum of squares, minimum 0 at the origin."""
    return float(np.sum(np.square(x)))


def rosenbrock(x: np.ndarray) -> float:
    """Rosenbrock valley, minimum 0 at ``(1, ..., 1)``."""
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (1.0 - x[:-1]) ** 2))


def rastrigin(x: np.ndarray) -> float:
    """Rastrigin function, minimum 0 at the origin."""
    return float(10.0 * x.size + np.sum(x ** 2 - 10.0 * np.cos(2.0 * math.pi * x)))


BENCHMARKS: Dict[str, Objective] = {
    "sphere": sphere,
    "rosenbrock": rosenbrock,
    "rastrigin": rastrigin,
}
"""Analytic test functions by name."""

BENCHMARK_BOUNDS: Dict[str, Sequence[float]] = {
    "sphere": (-5.0, 5.0),
    "rosenbrock": (-2.048, 2.048),
    "rastrigin": (-5.12, 5.12),
}
"""Usual search box of each test function, same on every dimension."""
