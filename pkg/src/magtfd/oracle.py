"""Independent brute-force implementations used for cross-validation.

Everything here deliberately avoids the closed forms of the fast path:
full 8x8 matrix assembly, Taylor matrix exponentials, truncated series
sums and finite differences.  Used by tests only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from mpmath import mp

from .complexity import EvaluationContext, complexity_at
from .covariance import squeezer_matrix, vacuum_block
from .errors import NumericDomainError, ParameterError
from .model import ModeFrequencies, ThermalParams

_SECTOR_ORDER = ((1, +1), (1, -1), (2, +1), (2, -1))


@dataclass(frozen=True)
class FullCovariance:
    """8x8 block-diagonal covariance in the basis (X1+,P1+,X1-,P1-,X2+,P2+,X2-,P2-)."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.entries, float)
        if m.shape != (8, 8):
            raise ParameterError("full covariance must be 8x8")
        object.__setattr__(self, "entries", m)


def assemble_full(ctx: EvaluationContext, t: float, mass: float = 1.0):
    """Target covariance G(t) and the inverse reference, as explicit 8x8 matrices."""
    target = np.zeros((8, 8))
    ref_inv = np.zeros((8, 8))
    for slot, (mode, sign) in enumerate(_SECTOR_ORDER):
        alpha = ctx.alphas.alpha1 if mode == 1 else ctx.alphas.alpha2
        omega = ctx.freqs.omega1 if mode == 1 else ctx.freqs.omega2
        omega_r = ctx.refs.omega_r1 if mode == 1 else ctx.refs.omega_r2
        u = squeezer_matrix(alpha, sign, omega, mass, t)
        g0 = vacuum_block(omega, mass).as_matrix()
        block = u @ g0 @ u.T
        sl = slice(2 * slot, 2 * slot + 2)
        target[sl, sl] = block
        ref_inv[sl, sl] = np.diag([mass * omega_r, 1.0 / (mass * omega_r)])
    return FullCovariance(target), FullCovariance(ref_inv)


def matrix_exponential_small(m: np.ndarray, tol: float = 1e-14) -> np.ndarray:
    """Scaled-and-squared Taylor exponential of a small matrix."""
    if not tol > 0:
        raise ParameterError("tolerance must be positive")
    m = np.asarray(m, float)
    norm = np.abs(m).max()
    squarings = max(0, int(math.ceil(math.log2(norm))) + 1) if norm > 1.0 else 0
    ms = m / (2.0**squarings)
    result = np.eye(m.shape[0])
    term = np.eye(m.shape[0])
    for k in range(1, 201):
        term = term @ ms / k
        result = result + term
        if np.abs(term).max() < tol:
            break
    else:
        raise NumericDomainError("matrix exponential did not converge in 200 terms")
    for _ in range(squarings):
        result = result @ result
    return result


def _block_eigenvalues(block: np.ndarray) -> tuple[float, float]:
    """Eigenvalues of a 2x2 block from its characteristic polynomial."""
    tr = block[0, 0] + block[1, 1]
    det = block[0, 0] * block[1, 1] - block[0, 1] * block[1, 0]
    disc = tr * tr - 4.0 * det
    if disc < 0.0:
        # tolerate roundoff at the degenerate point
        if disc < -1e-9 * max(tr * tr, 1.0):
            raise NumericDomainError("complex eigenvalues in relative covariance block")
        disc = 0.0
    root = math.sqrt(disc)
    big = (tr + root) / 2.0
    # smaller root via det/big avoids the tr - root cancellation
    return det / big if big != 0.0 else (tr - root) / 2.0, big


def complexity_bruteforce(ctx: EvaluationContext, t: float, mass: float = 1.0) -> float:
    """Complexity from the explicit 8x8 relative covariance matrix.

    Assembled and diagonalized in 50-digit arithmetic: at strong squeezing
    the U G0 U^T products lose ~cosh^2(2 alpha) in double precision, which
    would drown the 1e-10 cross-check this oracle exists to provide.
    """
    with mp.workdps(50):
        target = mp.zeros(8, 8)
        ref_inv = mp.zeros(8, 8)
        for slot, (mode, sign) in enumerate(_SECTOR_ORDER):
            alpha = mp.mpf(ctx.alphas.alpha1 if mode == 1 else ctx.alphas.alpha2)
            omega = mp.mpf(ctx.freqs.omega1 if mode == 1 else ctx.freqs.omega2)
            omega_r = mp.mpf(ctx.refs.omega_r1 if mode == 1 else ctx.refs.omega_r2)
            mm = mp.mpf(mass)
            c, s = mp.cos(omega * mp.mpf(t)), mp.sin(omega * mp.mpf(t))
            k = mp.matrix([[c, -s / (mm * omega)], [-mm * omega * s, -c]])
            u = mp.cosh(alpha) * mp.eye(2) + sign * mp.sinh(alpha) * k
            g0 = mp.matrix([[1 / (mm * omega), 0], [0, mm * omega]])
            block = u * g0 * u.T
            for a in range(2):
                for b in range(2):
                    target[2 * slot + a, 2 * slot + b] = block[a, b]
            ref_inv[2 * slot, 2 * slot] = mm * omega_r
            ref_inv[2 * slot + 1, 2 * slot + 1] = 1 / (mm * omega_r)
        delta = target * ref_inv
        total = mp.mpf(0)
        for slot in range(4):
            tr = delta[2 * slot, 2 * slot] + delta[2 * slot + 1, 2 * slot + 1]
            det = (
                delta[2 * slot, 2 * slot] * delta[2 * slot + 1, 2 * slot + 1]
                - delta[2 * slot, 2 * slot + 1] * delta[2 * slot + 1, 2 * slot]
            )
            disc = tr * tr - 4 * det
            if disc < 0:
                disc = mp.mpf(0)
            root = mp.sqrt(disc)
            for e in ((tr - root) / 2, (tr + root) / 2):
                if e <= 0:
                    raise NumericDomainError("nonpositive eigenvalue; covariance assembly is broken")
                total += mp.log(e) ** 2
        return float(mp.sqrt(total) / 2)


def partition_series(
    freqs: ModeFrequencies, beta: float, hbar: float = 1.0, tol: float = 1e-12
) -> float:
    """Truncated double sum over the spectrum, cross-checked two ways.

    The cutoff N comes from the geometric tail bound of the slower mode.
    The direct double sum and the factorized product of single-mode sums
    must agree to the requested tolerance.
    """
    if not tol > 0:
        raise ParameterError("tolerance must be positive")
    if freqs.omega2 <= 0:
        raise NumericDomainError("omega2 = 0: series does not converge")
    b = beta * hbar
    q_min = math.exp(-b * freqs.omega2)
    n = 1
    while q_min**n / (1.0 - q_min) >= tol:
        n += 1
        if n > 10**6:
            raise NumericDomainError("tail tolerance unreachable within 10^6 terms")
    ns = np.arange(n + 1)
    factorized = float(
        np.exp(-b * freqs.omega1 * (ns + 0.5)).sum() * np.exp(-b * freqs.omega2 * (ns + 0.5)).sum()
    )
    direct = 0.0
    levels2 = b * freqs.omega2 * (ns + 0.5)
    for i in range(n + 1):
        direct += float(np.exp(-(b * freqs.omega1 * (i + 0.5) + levels2)).sum())
    if abs(direct - factorized) > 10 * tol * max(factorized, 1.0):
        raise NumericDomainError("factorized and direct series disagree")
    return direct


def _log_partition(freqs: ModeFrequencies, beta: float, hbar: float) -> float:
    # log of the closed form, stable where Z itself underflows
    if freqs.omega2 <= 0.0:
        raise NumericDomainError("omega2 = 0: partition function diverges")
    b = ThermalParams(beta).beta * hbar
    return (
        -b * (freqs.omega1 + freqs.omega2) / 2.0
        - math.log(-math.expm1(-b * freqs.omega1))
        - math.log(-math.expm1(-b * freqs.omega2))
    )


def internal_energy_fd(
    freqs: ModeFrequencies, beta: float, hbar: float = 1.0, step: float = 1e-6
) -> float:
    """Central difference of -ln Z across beta."""
    if not 0 < step < beta / 10:
        raise ParameterError("step must be positive and small compared to beta")
    return -(
        _log_partition(freqs, beta + step, hbar) - _log_partition(freqs, beta - step, hbar)
    ) / (2.0 * step)


def rate_fd(ctx: EvaluationContext, t: float, step: float = 1e-6) -> float:
    """Central difference of the complexity itself."""
    if not step > 0:
        raise ParameterError("step must be positive")
    return (complexity_at(ctx, t + step) - complexity_at(ctx, t - step)) / (2.0 * step)
