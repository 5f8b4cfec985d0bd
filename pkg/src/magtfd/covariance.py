"""Covariance structures of the time-evolved thermofield double.

Everything lives in the light-cone basis, where the state factorizes into
four independent 2x2 sectors labeled (mode, sign).  The fast path never
materializes the 8x8 matrices; those live in the oracle module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericDomainError, ParameterError

# values of the sector function in [1 - CLAMP_TOL, 1) are rounded up to 1;
# anything lower signals a bug rather than roundoff
CLAMP_TOL = 1e-12


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


@dataclass(frozen=True)
class CovarianceBlock:
    """Symmetric positive-definite 2x2 covariance block (xx, xp, pp)."""

    xx: float
    xp: float
    pp: float

    def __post_init__(self) -> None:
        _require(self.xx > 0 and self.pp > 0, "diagonal covariance entries must be positive")
        _require(self.xx * self.pp - self.xp**2 > 0, "covariance block must be positive definite")

    def determinant(self) -> float:
        return self.xx * self.pp - self.xp**2

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.xx, self.xp], [self.xp, self.pp]])


@dataclass(frozen=True)
class ReferenceFrequencies:
    """Frequencies of the vacuum reference state, one per mode."""

    omega_r1: float
    omega_r2: float

    def __post_init__(self) -> None:
        _require(self.omega_r1 > 0 and self.omega_r2 > 0, "reference frequencies must be positive")


@dataclass(frozen=True)
class SectorLabel:
    """One of the four light-cone sectors: mode 1 or 2, sign +1 or -1."""

    mode: int
    sign: int

    def __post_init__(self) -> None:
        _require(self.mode in (1, 2), "mode must be 1 or 2")
        _require(self.sign in (1, -1), "sign must be +1 or -1")


SECTORS = (SectorLabel(1, 1), SectorLabel(1, -1), SectorLabel(2, 1), SectorLabel(2, -1))


@dataclass(frozen=True)
class RelativeSpectrum:
    """The four sector functions at a fixed time; each one is >= 1."""

    a1p: float
    a1m: float
    a2p: float
    a2m: float

    def __iter__(self):
        return iter((self.a1p, self.a1m, self.a2p, self.a2m))


def vacuum_block(omega: float, mass: float = 1.0) -> CovarianceBlock:
    """Ground-state covariance diag(1/(m omega), m omega)."""
    _require(omega > 0, "omega must be positive")
    _require(mass > 0, "mass must be positive")
    return CovarianceBlock(1.0 / (mass * omega), 0.0, mass * omega)


def k_generator_matrix(omega: float, mass: float = 1.0, t: float = 0.0) -> np.ndarray:
    """Matrix representation of the sector squeezing generator; squares to identity."""
    _require(omega > 0, "omega must be positive")
    _require(mass > 0, "mass must be positive")
    c, s = math.cos(omega * t), math.sin(omega * t)
    return np.array([[c, -s / (mass * omega)], [-mass * omega * s, -c]])


def squeezer_matrix(alpha: float, sign: int, omega: float, mass: float = 1.0, t: float = 0.0) -> np.ndarray:
    """exp(sign * alpha * K) = cosh(alpha) I + sign sinh(alpha) K; unit determinant."""
    _require(alpha >= 0, "alpha must be nonnegative")
    _require(sign in (1, -1), "sign must be +1 or -1")
    k = k_generator_matrix(omega, mass, t)
    return math.cosh(alpha) * np.eye(2) + sign * math.sinh(alpha) * k


def target_block(alpha: float, sign: int, omega: float, mass: float = 1.0, t: float = 0.0) -> CovarianceBlock:
    """Closed form of the squeezed vacuum block U G0 U^T for one sector."""
    _require(alpha >= 0, "alpha must be nonnegative")
    _require(sign in (1, -1), "sign must be +1 or -1")
    _require(omega > 0, "omega must be positive")
    _require(mass > 0, "mass must be positive")
    plus, minus = squeeze_combinations(alpha, omega, t)
    p, q = (plus, minus) if sign > 0 else (minus, plus)
    return CovarianceBlock(
        float(p) / (mass * omega),
        -sign * math.sinh(2.0 * alpha) * math.sin(omega * t),
        mass * omega * float(q),
    )


def relative_block(target: CovarianceBlock, omega_r: float, mass: float = 1.0) -> np.ndarray:
    """Product of a target block with the inverse reference block diag(m w_R, 1/(m w_R))."""
    _require(omega_r > 0, "reference frequency must be positive")
    _require(mass > 0, "mass must be positive")
    g_inv = np.diag([mass * omega_r, 1.0 / (mass * omega_r)])
    return target.as_matrix() @ g_inv


def squeeze_combinations(alpha: float, omega: float, t):
    """Stable (cosh 2a + sinh 2a cos wt, cosh 2a - sinh 2a cos wt).

    The naive difference cancels catastrophically at strong squeezing when
    cos wt approaches +/-1; rewriting via 1 -/+ cos = 2 sin^2/cos^2(wt/2)
    and cosh - sinh = e^{-2a} keeps every term nonnegative.
    """
    t = np.asarray(t, dtype=float)
    ch, sh = math.cosh(2.0 * alpha), math.sinh(2.0 * alpha)
    decay = math.exp(-2.0 * alpha)
    cos = np.cos(omega * t)
    sin_half_sq = np.sin(omega * t / 2.0) ** 2
    cos_half_sq = np.cos(omega * t / 2.0) ** 2
    plus = np.where(cos >= 0.0, ch + sh * cos, 2.0 * ch * cos_half_sq - cos * decay)
    minus = np.where(cos >= 0.0, 2.0 * ch * sin_half_sq + cos * decay, ch - sh * cos)
    return plus, minus


def sector_a_values(alpha: float, omega: float, omega_r: float, sign: int, t):
    """Sector function without validation; scalar or array t, clamped at 1."""
    plus, minus = squeeze_combinations(alpha, omega, t)
    p, q = (plus, minus) if sign > 0 else (minus, plus)
    a = (omega_r**2 * p + omega**2 * q) / (2.0 * omega_r * omega)
    return _clamp_sector(a, f"A(sign={sign:+d})")


def _clamp_sector(a, where: str):
    """Clamp roundoff dips below 1; reject anything larger than the tolerance."""
    a = np.asarray(a, dtype=float)
    if np.any(a < 1.0 - CLAMP_TOL):
        raise NumericDomainError(f"sector function {where} fell below 1 beyond tolerance: min={a.min()}")
    return np.maximum(a, 1.0)


def sector_a(alpha: float, omega: float, omega_r: float, sign: int, t):
    """Half-trace of the sector's relative covariance matrix, always >= 1.

    A = [(w_R^2 + w^2) cosh 2a + sign (w_R^2 - w^2) sinh 2a cos wt] / (2 w_R w).
    Accepts scalar or array times; mass drops out.
    """
    _require(alpha >= 0, "alpha must be nonnegative")
    _require(omega > 0, "omega must be positive")
    _require(omega_r > 0, "reference frequency must be positive")
    _require(sign in (1, -1), "sign must be +1 or -1")
    out = sector_a_values(alpha, omega, omega_r, sign, t)
    return out if out.ndim else float(out)


def relative_spectrum(alphas, freqs, refs, t) -> RelativeSpectrum:
    """All four sector functions at one time."""
    return RelativeSpectrum(
        sector_a(alphas.alpha1, freqs.omega1, refs.omega_r1, +1, t),
        sector_a(alphas.alpha1, freqs.omega1, refs.omega_r1, -1, t),
        sector_a(alphas.alpha2, freqs.omega2, refs.omega_r2, +1, t),
        sector_a(alphas.alpha2, freqs.omega2, refs.omega_r2, -1, t),
    )


def relative_eigenvalues(a: float) -> tuple[float, float]:
    """Reciprocal eigenvalue pair (a - sqrt(a^2-1), a + sqrt(a^2-1)) of one sector."""
    a = float(_clamp_sector(a, "eigenvalue input"))
    e_plus = a + math.sqrt(a * a - 1.0)
    return 1.0 / e_plus, e_plus
