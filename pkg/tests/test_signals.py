"""Tests for the signal conditioning."""
import math
import unittest

import numpy as np
import pytest

from biotraj import signals
from biotraj.error import ModelError
from biotraj.model import EmgRecording, FilterSpec, MotionRecording, TimeSeries


def _sine(frequency: float, rate: float = 100.0, duration: float = 10.0) -> TimeSeries:
    t = np.arange(int(duration * rate) + 1) / rate
    return TimeSeries(t, np.sin(2 * math.pi * frequency * t), "sine")


def _amplitude(series: TimeSeries) -> float:
    middle = (series.t > 2.0) & (series.t < 8.0)
    return float(np.max(np.abs(series.v[middle])))


class LowpassTest(unittest.TestCase):
    """Test class."""

    def test_constant_unchanged(self) -> None:
        series = TimeSeries(np.arange(200) / 100.0, np.full(200, 3.5))
        filtered = signals.lowpass_zero_phase(series, FilterSpec(6.0))
        self.assertTrue(np.allclose(3.5, filtered.v, atol=1e-9))

    def test_passband_kept(self) -> None:
        filtered = signals.lowpass_zero_phase(_sine(1.0), FilterSpec(6.0))
        self.assertGreaterEqual(_amplitude(filtered), 0.98)

    def test_stopband_removed(self) -> None:
        filtered = signals.lowpass_zero_phase(_sine(40.0), FilterSpec(6.0))
        self.assertLessEqual(_amplitude(filtered), 0.05)

    def test_no_phase_shift(self) -> None:
        t = np.arange(1001) / 100.0
        pulse = TimeSeries(t, np.exp(-(((t - 5.0) / 0.3) ** 2)))
        filtered = signals.lowpass_zero_phase(pulse, FilterSpec(6.0))
        self.assertLess(abs(filtered.t[int(np.argmax(filtered.v))] - 5.0), 0.01)

    def test_cutoff_above_nyquist(self) -> None:
        with self.assertRaises(ModelError) as context:
            signals.lowpass_zero_phase(_sine(1.0), FilterSpec(60.0))
        self.assertEqual("cutoff_above_nyquist", context.exception.code)
        self.assertAlmostEqual(50.0, context.exception.details["nyquist_hz"])

    def test_too_few_samples(self) -> None:
        with self.assertRaises(ModelError) as context:
            signals.lowpass_zero_phase(TimeSeries([0.0], [1.0]), FilterSpec(6.0))
        self.assertEqual("too_few_samples", context.exception.code)

    def test_short_series(self) -> None:
        series = TimeSeries([0.0, 0.01, 0.02, 0.03], [1.0, 1.0, 1.0, 1.0])
        filtered = signals.lowpass_zero_phase(series, FilterSpec(6.0))
        self.assertEqual(4, len(filtered))

    def test_non_uniform_is_resampled(self) -> None:
        t = np.concatenate([np.arange(100) / 100.0, 1.0 + np.arange(1, 50) / 50.0])
        series = TimeSeries(t, np.ones_like(t))
        filtered = signals.lowpass_zero_phase(series, FilterSpec(6.0))
        self.assertTrue(filtered.is_uniform)
        self.assertTrue(np.allclose(1.0, filtered.v, atol=1e-9))

    def test_condition_motion(self) -> None:
        t = np.arange(300) / 100.0
        motion = MotionRecording(TimeSeries(t, 10 * t), TimeSeries(t, 50 * t))
        conditioned = signals.condition_motion(motion, FilterSpec(6.0))
        self.assertIsNone(conditioned.wrist_accel)
        middle = (t > 1.0) & (t < 2.0)
        self.assertTrue(np.allclose(50 * t[middle], conditioned.elbow_angle.v[middle], atol=1e-3))


class ResampleTest(unittest.TestCase):
    """Test class."""

    def test_linear_interpolation(self) -> None:
        series = TimeSeries([0.0, 1.0, 3.0], [0.0, 2.0, 6.0])
        resampled = signals.resample_uniform(series, 2.0)
        self.assertEqual([0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0], resampled.t.tolist())
        self.assertTrue(np.allclose(2.0 * resampled.t, resampled.v))

    def test_default_rate_is_median(self) -> None:
        series = TimeSeries([0.0, 0.1, 0.2, 0.25, 0.35], [0.0] * 5)
        self.assertAlmostEqual(10.0, signals.resample_uniform(series).sampling_rate)

    def test_invalid_rate(self) -> None:
        with self.assertRaises(ModelError) as context:
            signals.resample_uniform(TimeSeries([0.0, 1.0], [0.0, 1.0]), 0.0)
        self.assertEqual("invalid_span", context.exception.code)


def _burst(rate: float = 500.0) -> TimeSeries:
    t = np.arange(int(3.0 * rate) + 1) / rate
    window = np.exp(-0.5 * ((t - 1.2) / 0.15) ** 2)
    return TimeSeries(t, 0.5 * window * np.sin(2 * math.pi * 83.0 * t), "deltoid")


class EnvelopeTest(unittest.TestCase):
    """Test class."""

    def test_zero_stays_zero(self) -> None:
        t = np.arange(500) / 500.0
        envelope = signals.emg_envelope(TimeSeries(t, np.zeros_like(t)))
        self.assertTrue(np.all(envelope.v == 0.0))

    def test_constant_stays_constant(self) -> None:
        t = np.arange(500) / 500.0
        envelope = signals.emg_envelope(TimeSeries(t, np.full_like(t, -0.2)))
        self.assertTrue(np.allclose(0.2, envelope.v, atol=1e-9))

    def test_burst_peak_time(self) -> None:
        envelope = signals.emg_envelope(_burst())
        self.assertTrue(np.all(envelope.v >= 0.0))
        self.assertLess(abs(envelope.t[int(np.argmax(envelope.v))] - 1.2), 0.05)

    def test_every_channel(self) -> None:
        burst = _burst()
        recording = EmgRecording(burst, burst, burst, burst)
        envelopes = signals.emg_envelopes(recording)
        self.assertEqual(["deltoid", "triceps", "biceps", "brachioradialis"], list(envelopes))


class PeakTest(unittest.TestCase):
    """Test class."""

    def test_detect_peaks(self) -> None:
        t = np.arange(1001) / 100.0
        series = TimeSeries(t, np.exp(-((t - 3.0) ** 2)) + 0.5 * np.exp(-((t - 7.0) ** 2)))
        peaks = signals.detect_peaks(series, 0.1)
        self.assertEqual(2, len(peaks))
        self.assertAlmostEqual(3.0, peaks[0][0], places=9)
        self.assertAlmostEqual(7.0, peaks[1][0], places=9)

    def test_prominence_filters_small_bumps(self) -> None:
        t = np.arange(1001) / 100.0
        series = TimeSeries(t, np.exp(-((t - 3.0) ** 2)) + 0.01 * np.exp(-((t - 7.0) ** 2)))
        self.assertEqual(1, len(signals.detect_peaks(series, signals.default_prominence(series))))

    def test_monotone_has_no_peak(self) -> None:
        series = TimeSeries([0.0, 1.0, 2.0, 3.0], [0.0, 1.0, 2.0, 3.0])
        self.assertEqual([], signals.detect_peaks(series, 0.0))

    def test_too_few_samples(self) -> None:
        with self.assertRaises(ModelError):
            signals.detect_peaks(TimeSeries([0.0, 1.0], [0.0, 1.0]), 0.0)


@pytest.mark.parametrize("count", [2, 3, 50])
def test_derivative_of_ramp(count: int) -> None:
    t = np.linspace(0.0, 1.0, count)
    derivative = signals.numeric_derivative(TimeSeries(t, 4.0 * t + 1.0))
    assert np.allclose(4.0, derivative.v)


def test_derivative_of_sine() -> None:
    t = np.arange(2001) / 1000.0
    derivative = signals.numeric_derivative(TimeSeries(t, np.sin(2 * math.pi * t)))
    assert np.max(np.abs(derivative.v - 2 * math.pi * np.cos(2 * math.pi * t))) < 1e-3


def test_derivative_needs_two_samples() -> None:
    with pytest.raises(ModelError) as info:
        signals.numeric_derivative(TimeSeries([0.0], [1.0]))
    assert info.value.code == "too_few_samples"
