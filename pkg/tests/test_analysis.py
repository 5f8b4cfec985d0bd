"""Period estimation, beat detection, sweeps and the Lloyd-bound report."""

import math

import numpy as np
import pytest

from magtfd.analysis import (
    TimeSeries,
    estimate_beat_period,
    estimate_period,
    lloyd_report,
    sample_series,
    sweep,
)
from magtfd.complexity import EvaluationContext
from magtfd.covariance import ReferenceFrequencies
from magtfd.errors import InsufficientDataError, ParameterError


def synthetic(f, t0, t1, n):
    t = np.linspace(t0, t1, n)
    return TimeSeries(t, f(t))


class TestTimeSeries:
    def test_requires_uniform_grid(self):
        with pytest.raises(ParameterError):
            TimeSeries(np.array([0.0, 1.0, 3.0]), np.zeros(3))

    def test_requires_matching_shapes(self):
        with pytest.raises(ParameterError):
            TimeSeries(np.arange(4.0), np.zeros(3))

    def test_dt(self):
        s = synthetic(np.cos, 0.0, 10.0, 101)
        assert s.dt == pytest.approx(0.1)


class TestCarrierPeriod:
    @pytest.mark.parametrize("omega", [0.05, 0.3, 2.0])
    def test_recovers_cosine_period(self, omega):
        true = 2.0 * math.pi / omega
        # 6 periods, 128 samples per period
        s = synthetic(lambda t: np.cos(omega * t), 0.0, 6 * true, 6 * 128)
        est = estimate_period(s)
        assert est.period == pytest.approx(true, rel=1e-3)
        assert est.confidence == 1.0

    def test_prominence_filter_ignores_ripple(self):
        # small fast ripple on a slow oscillation: the slow period must win
        slow, fast = 0.05, 1.0
        true = 2.0 * math.pi / slow
        s = synthetic(
            lambda t: np.cos(slow * t) + 0.05 * np.cos(fast * t), 0.0, 6 * true, 6 * 2048
        )
        est = estimate_period(s)
        assert est.period == pytest.approx(true, rel=0.01)

    def test_too_few_peaks(self):
        s = synthetic(lambda t: np.cos(0.1 * t), 0.0, 10.0, 100)
        with pytest.raises(InsufficientDataError):
            estimate_period(s)

    def test_strong_field_complexity_period(self):
        ctx = EvaluationContext.build(math.sqrt(0.1 * 0.005), 0.095, 1.0)
        true = math.pi / ctx.freqs.omega2
        s = sample_series(ctx, 0.0, 8 * true, 60_000)
        est = estimate_period(s)
        assert est.period == pytest.approx(true, rel=0.02)


class TestBeatPeriod:
    def test_synthetic_two_tone_envelope(self):
        # cos(w1 t) + cos(w2 t): upper envelope antinodes repeat every 2 pi/(w1-w2)
        w1, w2 = 0.2, 0.18
        true = 2.0 * math.pi / (w1 - w2)
        s = synthetic(lambda t: np.cos(w1 * t) + np.cos(w2 * t), 0.0, 4 * true, 60_000)
        est = estimate_beat_period(s)
        assert est.period == pytest.approx(true, rel=0.05)

    def test_weak_field_complexity_beat(self):
        # complexity beats at twice the difference frequency of the envelope
        ctx = EvaluationContext.build(math.sqrt(0.1 * 0.09), 0.01, 0.5)
        true = math.pi / (ctx.freqs.omega1 - ctx.freqs.omega2)
        s = sample_series(ctx, 0.0, 3 * true, 60_000)
        est = estimate_beat_period(s)
        assert est.period == pytest.approx(true, rel=0.10)

    def test_strong_field_has_no_beat(self):
        ctx = EvaluationContext.build(math.sqrt(0.1 * 0.005), 0.095, 1.0)
        s = sample_series(ctx, 0.0, 8 * math.pi / ctx.freqs.omega2, 60_000)
        with pytest.raises(InsufficientDataError):
            estimate_beat_period(s)

    def test_flat_envelope_rejected(self):
        s = synthetic(lambda t: np.cos(0.2 * t), 0.0, 300.0, 20_000)
        with pytest.raises(InsufficientDataError):
            estimate_beat_period(s)


class TestSweep:
    refs = ReferenceFrequencies(1.0, 1.0)

    def test_matched_reference_point(self):
        ctx = EvaluationContext.build(0.1, 0.05, 1.0)
        refs = ReferenceFrequencies(ctx.freqs.omega1, ctx.freqs.omega2)
        rows = sweep([(1.0, 0.1, 0.05)], refs, window_samples=256)
        assert len(rows) == 1
        assert rows[0].rate_max == pytest.approx(0.0, abs=1e-12)
        assert rows[0].lloyd_satisfied

    def test_row_order_and_determinism(self):
        grid = [(b, 0.1, 0.05) for b in (0.5, 2.0, 8.0)]
        a = sweep(grid, self.refs, window_samples=256)
        b = sweep(grid, self.refs, window_samples=256)
        assert [r.beta for r in a] == [0.5, 2.0, 8.0]
        assert a == b

    def test_failed_point_is_flagged_not_fatal(self):
        # omega0 = 0 gives a flat second mode: thermal sums diverge
        rows = sweep([(1.0, 0.0, 0.3), (1.0, 0.1, 0.05)], self.refs, window_samples=256)
        assert rows[0].error is not None
        assert math.isnan(rows[0].c_max)
        assert rows[1].error is None

    def test_empty_grid_rejected(self):
        with pytest.raises(ParameterError):
            sweep([], self.refs)


class TestLloydReport:
    refs = ReferenceFrequencies(1.0, 1.0)

    def test_counts_and_margin(self):
        grid = [(b, 0.1, 0.05) for b in (0.5, 2.0, 8.0)]
        rows = sweep(grid, self.refs, window_samples=512)
        report = lloyd_report(rows)
        assert report.satisfied == 3
        assert report.violated == 0
        assert report.tightest_margin == min(r.lloyd_rhs - r.rate_max for r in rows)

    def test_asymptotes(self):
        rows = sweep([(1.0, 0.1, 0.05)], self.refs, window_samples=512)
        report = lloyd_report(rows)
        ctx = EvaluationContext.build(0.1, 0.05, 1.0)
        assert report.ground_state_energy == pytest.approx(
            (ctx.freqs.omega1 + ctx.freqs.omega2) / 2.0, rel=1e-12
        )
        assert report.high_temp_rate_plateau > 0

    def test_empty_rejected(self):
        with pytest.raises(ParameterError):
            lloyd_report([])
