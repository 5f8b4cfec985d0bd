"""Oscillation and beating of C(t) across magnetic-field regimes.

Strong field: omega1 >> omega2 and the complexity oscillates with the slow
mode, period pi/omega2. Weak field: the two modes are nearly degenerate and
the oscillation is amplitude-modulated with beat period pi/(omega1-omega2).
Zero field restores the single period pi/omega0.
"""

import math

from magtfd import (
    EvaluationContext,
    estimate_beat_period,
    estimate_period,
    sample_series,
)
from magtfd.errors import InsufficientDataError


def modes(omega1, omega2):
    # (omega0, omegac) that decouple into the requested mode frequencies
    return math.sqrt(omega1 * omega2), omega1 - omega2


def describe(label, omega0, omegac, beta, window, n=60_000):
    ctx = EvaluationContext.build(omega0, omegac, beta)
    series = sample_series(ctx, 0.0, window, n)
    est = estimate_period(series)
    print(f"{label}: omega1={ctx.freqs.omega1:.4g} omega2={ctx.freqs.omega2:.4g}")
    print(f"  dominant period {est.period:.2f} (confidence {est.confidence:.2f})")
    try:
        beat = estimate_beat_period(series)
        print(f"  beat period {beat.period:.2f} (confidence {beat.confidence:.2f})")
    except InsufficientDataError as exc:
        print(f"  no beat: {exc}")


w0, wc = modes(0.1, 0.005)
describe("strong field", w0, wc, beta=1.0, window=8 * math.pi / 0.005)
print(f"  expected pi/omega2 = {math.pi / 0.005:.2f}\n")

w0, wc = modes(0.1, 0.09)
describe("weak field", w0, wc, beta=0.5, window=3 * math.pi / 0.01)
print(f"  expected beat pi/(omega1-omega2) = {math.pi / 0.01:.2f}\n")

describe("zero field", 0.1, 0.0, beta=1.0, window=8 * math.pi / 0.1, n=20_000)
print(f"  expected pi/omega0 = {math.pi / 0.1:.2f}")
