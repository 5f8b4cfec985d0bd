"""Physical model of a charged oscillator in a magnetic field.

Covers parameter validation, the decoupling into two normal modes, the
energy spectrum in both (n, l) and (n, k) labelings, the partition function,
the internal energy and the thermofield-double squeezing coefficients.
Default units set hbar = 1, k_B = 1, mass = 1; every function still accepts
explicit values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DivergenceError, ParameterError

# arguments of arctanh beyond this are treated as a divergence, not +inf
_ARCTANH_GUARD = 1.0 - 1e-15


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


@dataclass(frozen=True)
class OscillatorParams:
    """Physical inputs: trap frequency, cyclotron frequency, mass, hbar."""

    omega0: float
    omega_c: float
    mass: float = 1.0
    hbar: float = 1.0

    def __post_init__(self) -> None:
        _require(self.mass > 0, "mass must be positive")
        _require(self.hbar > 0, "hbar must be positive")
        _require(self.omega0 >= 0, "omega0 must be nonnegative")
        _require(self.omega_c >= 0, "omega_c must be nonnegative")
        _require(
            self.omega0 > 0 or self.omega_c > 0,
            "at least one of omega0, omega_c must be positive",
        )

    @classmethod
    def from_field(
        cls,
        omega0: float,
        charge: float,
        field: float,
        mass: float = 1.0,
        hbar: float = 1.0,
    ) -> "OscillatorParams":
        """Build from (charge, magnetic field) instead of a cyclotron frequency."""
        return cls(omega0, cyclotron_frequency(charge, field, mass), mass, hbar)


@dataclass(frozen=True)
class ModeFrequencies:
    """Decoupled normal-mode frequencies, omega1 >= omega2."""

    omega1: float
    omega2: float

    def __post_init__(self) -> None:
        _require(self.omega1 > 0, "omega1 must be positive")
        _require(self.omega2 >= 0, "omega2 must be nonnegative")
        _require(self.omega1 >= self.omega2, "omega1 must be >= omega2")


@dataclass(frozen=True)
class ThermalParams:
    """Inverse temperature beta = 1/T with k_B absorbed."""

    beta: float

    def __post_init__(self) -> None:
        _require(self.beta > 0 and math.isfinite(self.beta), "beta must be positive and finite")


@dataclass(frozen=True)
class TfdCoefficients:
    """Two-mode squeezing amplitudes of the thermofield double."""

    alpha1: float
    alpha2: float

    def __post_init__(self) -> None:
        _require(self.alpha1 >= 0, "alpha1 must be nonnegative")
        _require(self.alpha2 >= 0, "alpha2 must be nonnegative")


def cyclotron_frequency(charge: float, field: float, mass: float) -> float:
    """|e B| / m, the orbit frequency of a charge in a magnetic field."""
    _require(mass > 0, "mass must be positive")
    return abs(charge * field) / mass


def normal_mode_frequencies(params: OscillatorParams) -> ModeFrequencies:
    """Split the magnetic oscillator into two free modes.

    omega_{1,2} = (sqrt(4 omega0^2 + omega_c^2) +/- omega_c) / 2, so that
    omega1 * omega2 = omega0^2 and omega1 - omega2 = omega_c.
    """
    root = math.sqrt(4.0 * params.omega0**2 + params.omega_c**2)
    return ModeFrequencies((root + params.omega_c) / 2.0, (root - params.omega_c) / 2.0)


def energy_nl(n: int, l: int, freqs: ModeFrequencies, hbar: float = 1.0) -> float:
    """Energy level in the (principal, magnetic) quantum-number labeling.

    Valid for n >= 0 and l >= -n; equals energy_nk(n, n + l).
    """
    _require(n >= 0, "n must be nonnegative")
    _require(l >= -n, "l must be >= -n")
    return hbar * (freqs.omega1 + freqs.omega2) * (n + 0.5) + hbar * freqs.omega2 * l


def energy_nk(n: int, k: int, freqs: ModeFrequencies, hbar: float = 1.0) -> float:
    """Energy level of the two decoupled ladders: hw1(n + 1/2) + hw2(k + 1/2)."""
    _require(n >= 0, "n must be nonnegative")
    _require(k >= 0, "k must be nonnegative")
    return hbar * freqs.omega1 * (n + 0.5) + hbar * freqs.omega2 * (k + 0.5)


def _require_gapped(freqs: ModeFrequencies) -> None:
    if freqs.omega2 <= 0.0:
        raise DivergenceError("omega2 = 0: thermal sums over the flat mode diverge")


def partition_function(freqs: ModeFrequencies, thermal: ThermalParams, hbar: float = 1.0) -> float:
    """Closed-form two-mode partition function.

    Z = exp(-beta*hbar*(w1+w2)/2) / [(1 - e^{-beta*hbar*w1}) (1 - e^{-beta*hbar*w2})]
    """
    _require_gapped(freqs)
    b = thermal.beta * hbar
    num = math.exp(-b * (freqs.omega1 + freqs.omega2) / 2.0)
    den = -math.expm1(-b * freqs.omega1) * -math.expm1(-b * freqs.omega2)
    return num / den


def internal_energy(freqs: ModeFrequencies, thermal: ThermalParams, hbar: float = 1.0) -> float:
    """U = -d(ln Z)/d(beta) = (hbar/2) sum_i omega_i coth(beta hbar omega_i / 2)."""
    _require_gapped(freqs)
    b = thermal.beta * hbar
    return (hbar / 2.0) * (
        freqs.omega1 / math.tanh(b * freqs.omega1 / 2.0)
        + freqs.omega2 / math.tanh(b * freqs.omega2 / 2.0)
    )


def ground_state_energy(freqs: ModeFrequencies, hbar: float = 1.0) -> float:
    """Zero-point energy hbar (omega1 + omega2) / 2, the beta -> inf limit of U."""
    return hbar * (freqs.omega1 + freqs.omega2) / 2.0


def _safe_arctanh(x: float) -> float:
    if x >= _ARCTANH_GUARD:
        raise DivergenceError(f"arctanh argument {x} too close to 1; squeezing diverges")
    return 0.5 * math.log1p(2.0 * x / (1.0 - x))


def tfd_alphas(freqs: ModeFrequencies, thermal: ThermalParams, hbar: float = 1.0) -> TfdCoefficients:
    """Squeezing amplitudes alpha_i = arctanh(e^{-beta hbar omega_i / 2})."""
    _require_gapped(freqs)
    b = thermal.beta * hbar
    return TfdCoefficients(
        _safe_arctanh(math.exp(-b * freqs.omega1 / 2.0)),
        _safe_arctanh(math.exp(-b * freqs.omega2 / 2.0)),
    )
