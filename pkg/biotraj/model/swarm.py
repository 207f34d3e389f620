"""Particle swarm settings and results."""
import math
from typing import Any, Sequence, Tuple

import attr
import numpy as np

from .. import defaults


@attr.s(frozen=True)
class PsoConfig:
    """Hyper parameters of the global best particle swarm.

    Args:
        swarm_size (int): Number of particles, at least 2.
        iterations (int): Maximum number of velocity updates.
        inertia (float): Velocity carried over between iterations, in [0, 1).
        cognitive (float): Pull towards the personal best.
        social (float): Pull towards the swarm best.
        seed (int): Seed of the random generator.
        tolerance (float): Best fitness improvement under which an
            iteration counts as stagnating.
        stagnation_window (int): Stagnating iterations in a row that stop
            the run.
    """

    swarm_size = attr.ib(type=int, default=defaults.PSO_SWARM_SIZE)
    iterations = attr.ib(type=int, default=defaults.PSO_ITERATIONS)
    inertia = attr.ib(type=float, default=defaults.PSO_INERTIA)
    cognitive = attr.ib(type=float, default=defaults.PSO_COGNITIVE)
    social = attr.ib(type=float, default=defaults.PSO_SOCIAL)
    seed = attr.ib(type=int, default=42)
    tolerance = attr.ib(type=float, default=defaults.PSO_TOLERANCE)
    stagnation_window = attr.ib(type=int, default=defaults.PSO_STAGNATION_WINDOW)

    @swarm_size.validator
    def _validate_swarm_size(self, attribute: Any, value: int) -> None:
        if value < 2:
            raise ValueError("swarm_size must be at least 2, got {}".format(value))

    @iterations.validator
    def _validate_iterations(self, attribute: Any, value: int) -> None:
        if value < 0:
            raise ValueError("iterations with value {} is not valid".format(value))

    @inertia.validator
    def _validate_inertia(self, attribute: Any, value: float) -> None:
        if not 0 <= value < 1:
            raise ValueError("inertia must be in [0, 1), got {}".format(value))

    @cognitive.validator
    @social.validator
    def _validate_acceleration(self, attribute: Any, value: float) -> None:
        if not (math.isfinite(value) and value > 0):
            raise ValueError("{} must be positive, got {}".format(attribute.name, value))

    @seed.validator
    def _validate_seed(self, attribute: Any, value: int) -> None:
        if not 0 <= value < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer, got {}".format(value))

    @tolerance.validator
    def _validate_tolerance(self, attribute: Any, value: float) -> None:
        if value < 0:
            raise ValueError("tolerance with value {} is not valid".format(value))

    @stagnation_window.validator
    def _validate_window(self, attribute: Any, value: int) -> None:
        if value < 1:
            raise ValueError("stagnation_window with value {} is not valid".format(value))


@attr.s(frozen=True)
class Bounds:
    """Box of the search space.

    Args:
        lower (Tuple[float, ...]): Lower bound per dimension.
        upper (Tuple[float, ...]): Upper bound per dimension.
    """

    lower = attr.ib(type=Tuple[float, ...], converter=lambda x: tuple(float(v) for v in x))
    upper = attr.ib(type=Tuple[float, ...], converter=lambda x: tuple(float(v) for v in x))

    def __attrs_post_init__(self) -> None:
        if not self.lower or len(self.lower) != len(self.upper):
            raise ValueError("lower and upper must have the same, non zero, length")
        for low, high in zip(self.lower, self.upper):
            if not (math.isfinite(low) and math.isfinite(high) and low < high):
                raise ValueError("bound [{}, {}] is not valid".format(low, high))

    @classmethod
    def from_pairs(cls, pairs: Sequence[Tuple[float, float]]) -> "Bounds":
        """Build bounds from ``[(lo, hi), ...]``."""
        return cls([low for low, _ in pairs], [high for _, high in pairs])

    @classmethod
    def cube(cls, low: float, high: float, dimension: int) -> "Bounds":
        return cls([low] * dimension, [high] * dimension)

    @property
    def dimension(self) -> int:
        return len(self.lower)

    @property
    def width(self) -> np.ndarray:
        return np.asarray(self.upper) - np.asarray(self.lower)

    def contains(self, position: Sequence[float]) -> bool:
        """Check a position lies inside the box, bounds included."""
        vector = np.asarray(position, dtype=float)
        return bool(
            vector.shape == (self.dimension,)
            and np.all(vector >= np.asarray(self.lower))
            and np.all(vector <= np.asarray(self.upper))
        )


@attr.s(frozen=True)
class OptResult:
    """Outcome of a swarm run.

    Args:
        best_position (np.ndarray): Best decision vector found.
        best_fitness (float): Objective value at best_position.
        history (Tuple[float, ...]): Swarm best fitness after the initial
            pass and after every iteration.
        evaluations (int): Number of objective calls.
        terminated_by (str): ``iterations`` or ``stagnation``.
        iterations (int): Iterations executed.
        generator (str): Name of the bit generator.
        seed (int): Seed used.
    """

    best_position = attr.ib(type=np.ndarray, eq=False)
    best_fitness = attr.ib(type=float)
    history = attr.ib(type=Tuple[float, ...], converter=tuple)
    evaluations = attr.ib(type=int)
    terminated_by = attr.ib(type=str)
    iterations = attr.ib(type=int, default=0)
    generator = attr.ib(type=str, default=defaults.PSO_GENERATOR)
    seed = attr.ib(type=int, default=0)
