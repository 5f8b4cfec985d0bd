"""Nielsen complexity of the evolving thermofield double, its rate, and limits.

The fast path works per sector: C = (1/sqrt(2)) sqrt(sum arccosh(A)^2),
which equals (1/2) sqrt(sum (ln e_s)^2) over the eight reciprocal-paired
eigenvalues.  All functions accept scalar or array times.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .covariance import NumericDomainError, ReferenceFrequencies, sector_a_values
from .errors import ParameterError, SingularRateError
from .model import (
    ModeFrequencies,
    OscillatorParams,
    TfdCoefficients,
    ThermalParams,
    normal_mode_frequencies,
    tfd_alphas,
)

# below this distance from A = 1 the factor arccosh(A)/sqrt(A^2-1) switches
# to its series 1 - u/3 + 2u^2/15
_RATE_SERIES_CUTOFF = 1e-6


@dataclass(frozen=True)
class ComplexitySample:
    """One evaluated point: time, complexity, rate."""

    t: float
    c: float
    cdot: float


@dataclass(frozen=True)
class EvaluationContext:
    """Bundles the frequencies, reference, squeezing amplitudes and hbar."""

    freqs: ModeFrequencies
    refs: ReferenceFrequencies
    alphas: TfdCoefficients
    hbar: float = 1.0

    @classmethod
    def build(
        cls,
        omega0: float,
        omega_c: float,
        beta: float,
        omega_r1: float = 1.0,
        omega_r2: float = 1.0,
        hbar: float = 1.0,
    ) -> "EvaluationContext":
        """Assemble a context from physical inputs."""
        params = OscillatorParams(omega0, omega_c, hbar=hbar)
        freqs = normal_mode_frequencies(params)
        alphas = tfd_alphas(freqs, ThermalParams(beta), hbar)
        return cls(freqs, ReferenceFrequencies(omega_r1, omega_r2), alphas, hbar)

    def sectors(self):
        """(alpha, omega, omega_ref, sign) for each of the four sectors."""
        return (
            (self.alphas.alpha1, self.freqs.omega1, self.refs.omega_r1, +1),
            (self.alphas.alpha1, self.freqs.omega1, self.refs.omega_r1, -1),
            (self.alphas.alpha2, self.freqs.omega2, self.refs.omega_r2, +1),
            (self.alphas.alpha2, self.freqs.omega2, self.refs.omega_r2, -1),
        )


def complexity_at(ctx: EvaluationContext, t):
    """C(t) = (1/sqrt 2) sqrt(sum over sectors of arccosh(A)^2)."""
    t = np.asarray(t, dtype=float)
    s = np.zeros_like(t)
    for alpha, omega, omega_r, sign in ctx.sectors():
        s = s + np.arccosh(sector_a_values(alpha, omega, omega_r, sign, t)) ** 2
    c = np.sqrt(s / 2.0)
    return c if c.ndim else float(c)


def complexity_equal_ref(alphas: TfdCoefficients) -> float:
    """Time-independent complexity when the reference matches the mode frequencies."""
    return 2.0 * math.hypot(alphas.alpha1, alphas.alpha2)


def complexity_zero_temp_limit(freqs: ModeFrequencies, refs: ReferenceFrequencies) -> float:
    """Saturation value at beta -> inf: sqrt(ln^2(wR1/w1) + ln^2(wR2/w2))."""
    if freqs.omega2 <= 0:
        raise ParameterError("both mode frequencies must be positive")
    return math.hypot(
        math.log(refs.omega_r1 / freqs.omega1), math.log(refs.omega_r2 / freqs.omega2)
    )


def complexity_high_temp_approx(ctx: EvaluationContext, t, beta: float):
    """Leading high-temperature form of C(t); caller ensures beta hbar omega_i << 1."""
    t = np.asarray(t, dtype=float)
    s = np.zeros_like(t)
    for alpha, omega, omega_r, sign in ctx.sectors():
        arg = (
            2.0
            * ((omega_r**2 + omega**2) + sign * (omega_r**2 - omega**2) * np.cos(omega * t))
            / (beta * ctx.hbar * omega_r * omega**2)
        )
        if np.any(arg <= 0):
            raise NumericDomainError("nonpositive logarithm argument in high-temperature form")
        s = s + np.log(arg) ** 2
    c = np.sqrt(s / 2.0)
    return c if c.ndim else float(c)


def _rate_kernel(a):
    """arccosh(A)/sqrt(A^2 - 1) with its removable singularity at A = 1 filled in."""
    a = np.asarray(a, dtype=float)
    u = a - 1.0
    small = u < _RATE_SERIES_CUTOFF
    out = np.empty_like(a)
    out[small] = 1.0 - u[small] / 3.0 + 2.0 * u[small] ** 2 / 15.0
    ab = a[~small]
    out[~small] = np.arccosh(ab) / np.sqrt(ab * ab - 1.0)
    return out


def complexity_rate_at(ctx: EvaluationContext, t):
    """Analytic dC/dt = (1/(2C)) sum over sectors of arccosh(A) Adot / sqrt(A^2-1)."""
    scalar = np.ndim(t) == 0
    t = np.atleast_1d(np.asarray(t, dtype=float))
    num = np.zeros_like(t)
    for alpha, omega, omega_r, sign in ctx.sectors():
        a = sector_a_values(alpha, omega, omega_r, sign, t)
        adot = (
            -sign
            * (omega_r**2 - omega**2)
            * math.sinh(2.0 * alpha)
            * np.sin(omega * t)
            / (2.0 * omega_r)
        )
        num = num + _rate_kernel(a) * adot
    c = np.atleast_1d(complexity_at(ctx, t))
    zero = c == 0.0
    if np.any(zero):
        # C = 0 forces every A = 1; the limit is well defined iff the numerator vanishes too
        if np.any(num[zero] != 0.0):
            raise SingularRateError("complexity vanishes with a nonzero rate numerator")
        rate = np.where(zero, 0.0, num / np.where(zero, 1.0, 2.0 * c))
    else:
        rate = num / (2.0 * c)
    return float(rate[0]) if scalar else rate


def rate_high_temp_limit(freqs: ModeFrequencies, refs: ReferenceFrequencies, t):
    """beta -> 0 limit of the rate; a finite, temperature-independent oscillation."""
    t = np.asarray(t, dtype=float)
    s = np.zeros_like(t)
    for omega, omega_r in ((freqs.omega1, refs.omega_r1), (freqs.omega2, refs.omega_r2)):
        diff2 = (omega_r**2 - omega**2) ** 2
        s = s + omega * diff2 * np.sin(2.0 * omega * t) / (
            (omega_r**2 + omega**2) ** 2 - diff2 * np.cos(omega * t) ** 2
        )
    out = s / (2.0 * math.sqrt(2.0))
    return out if out.ndim else float(out)


def lloyd_rhs(u: float, hbar: float = 1.0) -> float:
    """Upper bound 2U/(pi hbar) on the absolute complexity rate."""
    if u <= 0:
        raise ParameterError("internal energy must be positive")
    return 2.0 * u / (math.pi * hbar)


def default_rate_window(
    freqs: ModeFrequencies, rel_tol: float = 1e-9, max_denominator: int = 1000
) -> float | None:
    """Fundamental time period of C(t), or None when there is no short one.

    A shift by pi/omega2 flips the sign of cos(omega2 t) and swaps the two
    sign sectors of mode 2, so C has period q pi/omega2 exactly when
    omega1/omega2 is a rational p/q with small q.  Larger denominators are
    treated as quasi-periodic.
    """
    if freqs.omega2 <= 0:
        return None
    ratio = freqs.omega1 / freqs.omega2
    frac = Fraction(ratio).limit_denominator(max_denominator)
    if abs(ratio - float(frac)) <= rel_tol * ratio:
        return frac.denominator * math.pi / freqs.omega2
    return None


def _golden_max(f, lo: float, hi: float, xtol: float) -> float:
    """Golden-section maximization of a unimodal scalar function."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > xtol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return max(fc, fd)


def max_abs_rate(ctx: EvaluationContext, t0: float, t1: float, samples: int = 2048) -> float:
    """Maximum of |dC/dt| over [t0, t1]: uniform grid plus golden-section refinement."""
    if not t1 > t0:
        raise ParameterError("t1 must exceed t0")
    if samples < 2:
        raise ParameterError("need at least 2 samples")
    grid = np.linspace(t0, t1, samples)
    vals = np.abs(complexity_rate_at(ctx, grid))
    i = int(np.argmax(vals))
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, samples - 1)]
    if hi <= lo:
        return float(vals[i])
    refined = _golden_max(lambda t: abs(complexity_rate_at(ctx, t)), lo, hi, 1e-10)
    return max(float(vals[i]), refined)


def sample(ctx: EvaluationContext, t: float) -> ComplexitySample:
    """Complexity and rate at a single time."""
    return ComplexitySample(t, complexity_at(ctx, t), complexity_rate_at(ctx, t))
