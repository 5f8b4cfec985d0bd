"""Sweeps, oscillation-period estimation and Lloyd-bound reporting.

Period estimation works on sampled complexity series.  The carrier period
comes from the median gap between prominent local maxima; the beat period
from clustering those maxima and measuring the spacing of the envelope
antinodes.  Strong-field series, whose amplitude modulation is synchronous
with the dominant oscillation itself, are rejected as "no beat".
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import find_peaks, peak_prominences

from .complexity import (
    EvaluationContext,
    complexity_at,
    default_rate_window,
    lloyd_rhs,
    max_abs_rate,
    rate_high_temp_limit,
)
from .errors import InsufficientDataError, MagtfdError, ParameterError
from .model import ThermalParams, internal_energy, ground_state_energy

# carrier peaks must reach this fraction of the largest prominence to count
_PROMINENCE_FRACTION = 0.5
# upper-envelope modulation below this fraction of the mean means "no beat"
_MODULATION_FLOOR = 0.01


@dataclass(frozen=True)
class TimeSeries:
    """Uniformly sampled signal."""

    t: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        t, v = np.asarray(self.t, float), np.asarray(self.values, float)
        if t.ndim != 1 or t.shape != v.shape or len(t) < 2:
            raise ParameterError("time series needs matching 1-d arrays of length >= 2")
        steps = np.diff(t)
        if np.any(np.abs(steps - steps[0]) > 1e-12 * max(abs(steps[0]), 1.0)):
            raise ParameterError("time grid must be uniformly spaced")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "values", v)

    @property
    def dt(self) -> float:
        return float(self.t[1] - self.t[0])


@dataclass(frozen=True)
class PeriodEstimate:
    """Estimated period plus the fraction of inter-peak gaps near the median."""

    period: float
    confidence: float

    def __post_init__(self) -> None:
        if not self.period > 0:
            raise ParameterError("period must be positive")


@dataclass
class SweepPoint:
    """One row of a parameter sweep; numeric fields are NaN when flagged."""

    beta: float
    omega0: float
    omega_c: float
    omega_r1: float
    omega_r2: float
    c_max: float = math.nan
    rate_max: float = math.nan
    internal_energy: float = math.nan
    lloyd_rhs: float = math.nan
    lloyd_satisfied: bool = False
    error: str | None = None


@dataclass(frozen=True)
class LloydReport:
    """Summary of a sweep against the Lloyd bound."""

    satisfied: int
    violated: int
    tightest_margin: float
    ground_state_energy: float
    high_temp_rate_plateau: float


def sample_series(ctx: EvaluationContext, t0: float, t1: float, n: int) -> TimeSeries:
    """Evaluate C(t) on a uniform grid of n points over [t0, t1]."""
    if not t1 > t0:
        raise ParameterError("t1 must exceed t0")
    if n < 2:
        raise ParameterError("need at least 2 samples")
    t = np.linspace(t0, t1, n)
    return TimeSeries(t, np.asarray(complexity_at(ctx, t)))


def _refine_peak(series: TimeSeries, i: int) -> tuple[float, float]:
    """Three-point parabolic refinement of a local maximum at sample i."""
    t, v = series.t, series.values
    if i == 0 or i == len(t) - 1:
        return float(t[i]), float(v[i])
    denom = v[i - 1] - 2.0 * v[i] + v[i + 1]
    if denom >= 0.0:
        return float(t[i]), float(v[i])
    delta = 0.5 * (v[i - 1] - v[i + 1]) / denom
    return float(t[i] + delta * series.dt), float(v[i] - 0.25 * (v[i - 1] - v[i + 1]) * delta)


def _prominent_peaks(series: TimeSeries) -> tuple[np.ndarray, np.ndarray]:
    """Refined (times, values) of local maxima in the top prominence band."""
    idx, _ = find_peaks(series.values)
    if len(idx) == 0:
        return np.array([]), np.array([])
    prom = peak_prominences(series.values, idx)[0]
    top = prom.max()
    if top == 0.0:
        keep = idx
    else:
        keep = idx[prom >= _PROMINENCE_FRACTION * top]
    refined = [_refine_peak(series, int(i)) for i in keep]
    return np.array([r[0] for r in refined]), np.array([r[1] for r in refined])


def _gap_estimate(times: np.ndarray) -> PeriodEstimate:
    gaps = np.diff(times)
    med = float(np.median(gaps))
    conf = float(np.mean(np.abs(gaps - med) <= 0.01 * med))
    return PeriodEstimate(med, conf)


def estimate_period(series: TimeSeries) -> PeriodEstimate:
    """Median spacing of the dominant oscillation maxima.

    Minor ripple maxima are filtered out by peak prominence so that the
    estimate tracks the dominant (lowest-frequency, largest-amplitude)
    oscillation rather than fast superimposed wiggles.
    """
    times, _ = _prominent_peaks(series)
    if len(times) < 3:
        raise InsufficientDataError(f"found {len(times)} dominant peaks, need at least 3")
    return _gap_estimate(times)


def _parabola_vertex(ts: np.ndarray, vs: np.ndarray) -> float:
    (t0, t1, t2), (v0, v1, v2) = ts, vs
    d = (t0 - t1) * (t0 - t2) * (t1 - t2)
    a = (t2 * (v1 - v0) + t1 * (v0 - v2) + t0 * (v2 - v1)) / d
    b = (t2 * t2 * (v0 - v1) + t1 * t1 * (v2 - v0) + t0 * t0 * (v1 - v2)) / d
    if a >= 0.0:
        return float(t1)
    return float(-b / (2.0 * a))


def estimate_beat_period(series: TimeSeries) -> PeriodEstimate:
    """Spacing of the envelope antinodes of a beating signal.

    Prominent carrier maxima are grouped into antinode clusters separated by
    more than two carrier periods; each interior cluster is reduced to its
    apex by a parabolic fit through its top three peaks.  Raises when the
    envelope is flat, carrier-synchronous, or clipped by the window.
    """
    all_idx, _ = find_peaks(series.values)
    if len(all_idx) < 3:
        raise InsufficientDataError("too few carrier maxima for an envelope")
    upper = series.values[all_idx]
    mean = float(np.mean(upper))
    if mean <= 0 or (upper.max() - upper.min()) < _MODULATION_FLOOR * abs(mean):
        raise InsufficientDataError("upper envelope modulation below 1% of its mean")

    tp, vp = _prominent_peaks(series)
    if len(tp) < 2:
        raise InsufficientDataError("too few prominent maxima for an envelope")
    carrier = float(np.median(np.diff(tp)))
    splits = np.where(np.diff(tp) > 2.0 * carrier)[0]
    clusters = np.split(np.arange(len(tp)), splits + 1)
    if len(clusters) < 2:
        raise InsufficientDataError("envelope modulation is carrier-synchronous; no beat")

    centers = []
    for ix in clusters:
        # clusters clipped by the window bias the apex position
        if tp[ix[0]] - series.t[0] < 2.0 * carrier or series.t[-1] - tp[ix[-1]] < 2.0 * carrier:
            continue
        j = ix[int(np.argmax(vp[ix]))]
        if j - 1 in ix and j + 1 in ix:
            centers.append(_parabola_vertex(tp[j - 1 : j + 2], vp[j - 1 : j + 2]))
        else:
            centers.append(float(np.mean(tp[ix])))
    if len(centers) < 2:
        raise InsufficientDataError("fewer than two interior envelope maxima")
    return _gap_estimate(np.asarray(centers))


def _sweep_window(ctx: EvaluationContext) -> float:
    window = default_rate_window(ctx.freqs)
    return window if window is not None else math.pi / ctx.freqs.omega2


def sweep(
    grid: list[tuple[float, float, float]],
    refs,
    hbar: float = 1.0,
    window_samples: int = 2048,
) -> list[SweepPoint]:
    """Evaluate max complexity, max |rate|, U and the Lloyd bound per grid point.

    Per-point failures are recorded in the row's error field instead of
    aborting the sweep; row order matches the input grid.
    """
    if not grid:
        raise ParameterError("sweep grid must be nonempty")
    rows: list[SweepPoint] = []
    for beta, omega0, omega_c in grid:
        row = SweepPoint(beta, omega0, omega_c, refs.omega_r1, refs.omega_r2)
        try:
            ctx = EvaluationContext.build(omega0, omega_c, beta, refs.omega_r1, refs.omega_r2, hbar)
            window = _sweep_window(ctx)
            series = sample_series(ctx, 0.0, window, window_samples)
            row.c_max = float(series.values.max())
            row.rate_max = max_abs_rate(ctx, 0.0, window, window_samples)
            row.internal_energy = internal_energy(ctx.freqs, ThermalParams(beta), hbar)
            row.lloyd_rhs = lloyd_rhs(row.internal_energy, hbar)
            row.lloyd_satisfied = row.rate_max <= row.lloyd_rhs + 1e-12
        except MagtfdError as exc:
            row.error = str(exc)
        rows.append(row)
    return rows


def lloyd_report(points: list[SweepPoint]) -> LloydReport:
    """Aggregate a sweep: bound violations, tightest margin and both asymptotes."""
    if not points:
        raise ParameterError("need at least one sweep point")
    ok = [p for p in points if p.error is None]
    satisfied = sum(p.lloyd_satisfied for p in ok)
    violated = len(ok) - satisfied
    margin = min((p.lloyd_rhs - p.rate_max for p in ok), default=math.nan)

    e00 = math.nan
    plateau = math.nan
    if ok:
        ref = ok[0]
        ctx = EvaluationContext.build(ref.omega0, ref.omega_c, ref.beta, ref.omega_r1, ref.omega_r2)
        e00 = ground_state_energy(ctx.freqs, ctx.hbar)
        window = _sweep_window(ctx)
        t = np.linspace(0.0, window, 100_000)
        plateau = float(np.max(np.abs(rate_high_temp_limit(ctx.freqs, ctx.refs, t))))
    return LloydReport(satisfied, violated, margin, e00, plateau)
