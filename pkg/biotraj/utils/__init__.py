"""Utility tool."""
import math
import os
from typing import Tuple

import numpy as np

from biotraj import defaults


def uniform_grid(t0: float, tf: float, dt: float) -> Tuple[np.ndarray, bool]:
    """Get the sampling times ``t0, t0 + dt, ...`` ending exactly on *tf*.

    Args:
        t0 (float): First sample, s.
        tf (float): Last sample, s.
        dt (float): Step, s.

    Returns:
        (np.ndarray, bool): The times and whether the last step had to be
        shortened because the span is not a whole multiple of *dt*.
    """
    steps = int(math.floor((tf - t0) / dt + 1e-9))
    times = t0 + dt * np.arange(steps + 1)
    partial = tf - times[-1] > dt * defaults.DT_TOLERANCE
    if partial:
        times = np.append(times, tf)
    else:
        times[-1] = tf
    return times, bool(partial)


def reduction_pct(standard: float, optimized: float) -> float:
    """Relative reduction ``100 * (standard - optimized) / standard``, 0 when
    the standard value is 0."""
    if standard == 0:
        return 0.0
    return 100.0 * (standard - optimized) / standard


def data_path(name: str) -> str:
    """Path of a file shipped in ``biotraj/data``."""
    return os.path.join(os.path.dirname(os.path.dirname(__file__)), "data", name)
