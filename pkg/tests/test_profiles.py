"""Tests for the classic velocity profiles."""
import unittest

import numpy as np
import pytest
from scipy.integrate import trapezoid

from biotraj import profiles
from biotraj.error import ModelError


@pytest.mark.parametrize("kind", profiles.PROFILE_KINDS)
def test_rest_to_rest(kind: str) -> None:
    traj = profiles.classic_profile(kind, 10.0, 160.0, 3.0)
    assert traj.joints == 1
    assert traj.size == 3001
    assert traj.theta[0, 0] == pytest.approx(10.0, abs=1e-9)
    assert traj.theta[0, -1] == pytest.approx(160.0, abs=1e-9)
    assert traj.omega[0, 0] == pytest.approx(0.0, abs=1e-9)
    assert traj.omega[0, -1] == pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize("kind", profiles.PROFILE_KINDS)
def test_speed_integrates_to_distance(kind: str) -> None:
    traj = profiles.classic_profile(kind, 0.0, 150.0, 3.0)
    assert trapezoid(traj.omega[0], traj.t) == pytest.approx(150.0, abs=1e-3)


@pytest.mark.parametrize(
    "kind, factor",
    [("trapezoid", 1.5), ("s_curve", 1.5), ("triangle", 2.0), ("cubic", 1.5), ("quintic", 1.875)],
)
def test_peak_speed(kind: str, factor: float) -> None:
    traj = profiles.classic_profile(kind, 0.0, 150.0, 3.0)
    assert np.max(traj.omega) == pytest.approx(factor * 150.0 / 3.0, rel=1e-6)


class ProfileTest(unittest.TestCase):
    """Test class."""

    def test_s_curve_starts_without_acceleration(self) -> None:
        traj = profiles.classic_profile("s_curve", 0.0, 1.0, 3.0)
        self.assertAlmostEqual(0.0, traj.alpha[0, 0], places=12)
        self.assertAlmostEqual(0.0, traj.alpha[0, -1], places=12)

    def test_trapezoid_cruises(self) -> None:
        traj = profiles.classic_profile("trapezoid", 0.0, 3.0, 3.0)
        cruise = traj.omega[0, (traj.t > 1.1) & (traj.t < 1.9)]
        self.assertTrue(np.allclose(1.5, cruise))

    def test_triangle_peaks_at_mid_time(self) -> None:
        traj = profiles.classic_profile("triangle", 0.0, 1.0, 2.0)
        self.assertAlmostEqual(1.0, traj.t[int(np.argmax(traj.omega[0]))], places=9)

    def test_partial_last_step(self) -> None:
        traj = profiles.classic_profile("cubic", 0.0, 1.0, 1.0, dt=0.3)
        self.assertTrue(traj.partial_last_step)
        self.assertEqual(1.0, traj.t[-1])
        self.assertAlmostEqual(1.0, traj.theta[0, -1], places=12)

    def test_unknown_profile(self) -> None:
        with self.assertRaises(ModelError) as context:
            profiles.classic_profile("sawtooth", 0.0, 1.0, 1.0)
        self.assertEqual("unknown_profile", context.exception.code)

    def test_invalid_duration(self) -> None:
        with self.assertRaises(ModelError) as context:
            profiles.classic_profile("quintic", 0.0, 1.0, 0.0)
        self.assertEqual("invalid_span", context.exception.code)
