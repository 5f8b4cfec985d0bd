"""Model layer: frequencies, spectrum, thermodynamics, squeezing amplitudes."""

import math

import pytest
from hypothesis import given, strategies as st

from magtfd.errors import DivergenceError, ParameterError
from magtfd.model import (
    ModeFrequencies,
    OscillatorParams,
    ThermalParams,
    cyclotron_frequency,
    energy_nk,
    energy_nl,
    ground_state_energy,
    internal_energy,
    normal_mode_frequencies,
    partition_function,
    tfd_alphas,
)

positive = st.floats(min_value=1e-3, max_value=1e3)


class TestParams:
    def test_cyclotron_frequency(self):
        assert cyclotron_frequency(2.0, 3.0, 1.5) == pytest.approx(4.0)
        assert cyclotron_frequency(-2.0, 3.0, 1.5) == pytest.approx(4.0)

    def test_from_field_matches_direct(self):
        a = OscillatorParams.from_field(0.1, 1.0, 0.095)
        b = OscillatorParams(0.1, 0.095)
        assert a == b

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(omega0=-0.1, omega_c=0.0),
            dict(omega0=0.0, omega_c=0.0),
            dict(omega0=0.1, omega_c=-1.0),
            dict(omega0=0.1, omega_c=0.0, mass=0.0),
            dict(omega0=0.1, omega_c=0.0, hbar=-1.0),
        ],
    )
    def test_invalid_params_rejected(self, kwargs):
        with pytest.raises(ParameterError):
            OscillatorParams(**kwargs)

    def test_beta_must_be_positive_finite(self):
        for bad in (0.0, -1.0, math.inf, math.nan):
            with pytest.raises(ParameterError):
                ThermalParams(bad)


class TestFrequencies:
    def test_weak_field_values(self):
        freqs = normal_mode_frequencies(OscillatorParams(0.022, 0.095))
        assert freqs.omega1 == pytest.approx(0.09984739726099092, rel=1e-12)
        assert freqs.omega2 == pytest.approx(0.004847397260990923, rel=1e-12)

    def test_scaling(self):
        lo = normal_mode_frequencies(OscillatorParams(0.022, 0.095))
        hi = normal_mode_frequencies(OscillatorParams(22.0, 95.0))
        assert hi.omega1 == pytest.approx(1000.0 * lo.omega1, rel=1e-12)
        assert hi.omega2 == pytest.approx(1000.0 * lo.omega2, rel=1e-12)

    def test_zero_field_degenerate(self):
        freqs = normal_mode_frequencies(OscillatorParams(0.1, 0.0))
        assert freqs.omega1 == freqs.omega2 == pytest.approx(0.1)

    def test_pure_field_flat_mode(self):
        freqs = normal_mode_frequencies(OscillatorParams(0.0, 0.3))
        assert freqs.omega1 == pytest.approx(0.3)
        assert freqs.omega2 == 0.0

    @given(omega0=positive, omega_c=st.floats(min_value=0.0, max_value=1e3))
    def test_product_and_difference_identities(self, omega0, omega_c):
        freqs = normal_mode_frequencies(OscillatorParams(omega0, omega_c))
        # omega2 comes from a subtraction, so the product's roundoff scales with omega1^2
        assert freqs.omega1 * freqs.omega2 == pytest.approx(
            omega0**2, rel=1e-12, abs=1e-14 * freqs.omega1**2
        )
        assert freqs.omega1 - freqs.omega2 == pytest.approx(omega_c, rel=1e-12, abs=1e-12)

    def test_ordering_enforced(self):
        with pytest.raises(ParameterError):
            ModeFrequencies(0.1, 0.2)


class TestSpectrum:
    freqs = ModeFrequencies(0.7, 0.3)

    def test_ground_state(self):
        assert energy_nk(0, 0, self.freqs) == pytest.approx(0.5)

    def test_ladder_spacing(self):
        e00 = energy_nk(0, 0, self.freqs)
        assert energy_nk(1, 0, self.freqs) - e00 == pytest.approx(0.7)
        assert energy_nk(0, 1, self.freqs) - e00 == pytest.approx(0.3)

    @given(n=st.integers(0, 30), k=st.integers(0, 30))
    def test_labelings_agree(self, n, k):
        assert energy_nl(n, k - n, self.freqs) == pytest.approx(
            energy_nk(n, k, self.freqs), rel=1e-14
        )

    def test_quantum_number_bounds(self):
        with pytest.raises(ParameterError):
            energy_nk(-1, 0, self.freqs)
        with pytest.raises(ParameterError):
            energy_nl(2, -3, self.freqs)

    def test_hbar_scales_linearly(self):
        assert energy_nk(3, 5, self.freqs, hbar=2.0) == pytest.approx(
            2.0 * energy_nk(3, 5, self.freqs)
        )


class TestThermodynamics:
    def test_partition_known_value(self):
        # omega1 = omega2 = 1, beta = ln 4: Z = (1/4)/(1 - 1/4)^2 = 4/9
        z = partition_function(ModeFrequencies(1.0, 1.0), ThermalParams(math.log(4.0)))
        assert z == pytest.approx(4.0 / 9.0, rel=1e-14)

    def test_internal_energy_low_temperature(self):
        freqs = ModeFrequencies(0.9, 0.2)
        u = internal_energy(freqs, ThermalParams(1e6))
        assert u == pytest.approx(ground_state_energy(freqs), abs=1e-8)

    def test_internal_energy_high_temperature(self):
        u = internal_energy(ModeFrequencies(0.9, 0.2), ThermalParams(1e-6))
        assert u == pytest.approx(2.0 / 1e-6, rel=1e-6)

    @given(beta=positive)
    def test_internal_energy_above_ground_state(self, beta):
        # at very large beta the thermal excess underflows, hence >=
        freqs = ModeFrequencies(1.3, 0.4)
        assert internal_energy(freqs, ThermalParams(beta)) >= ground_state_energy(freqs)

    def test_flat_mode_diverges(self):
        with pytest.raises(DivergenceError):
            partition_function(ModeFrequencies(1.0, 0.0), ThermalParams(1.0))
        with pytest.raises(DivergenceError):
            internal_energy(ModeFrequencies(1.0, 0.0), ThermalParams(1.0))


class TestSqueezing:
    @given(beta=positive)
    def test_tanh_identity(self, beta):
        freqs = ModeFrequencies(0.8, 0.3)
        alphas = tfd_alphas(freqs, ThermalParams(beta))
        assert math.tanh(alphas.alpha1) == pytest.approx(
            math.exp(-beta * freqs.omega1 / 2.0), rel=1e-12
        )
        assert math.tanh(alphas.alpha2) == pytest.approx(
            math.exp(-beta * freqs.omega2 / 2.0), rel=1e-12
        )

    def test_lower_frequency_mode_squeezes_harder(self):
        alphas = tfd_alphas(ModeFrequencies(0.8, 0.3), ThermalParams(1.0))
        assert alphas.alpha2 > alphas.alpha1 > 0

    def test_vanishes_at_zero_temperature(self):
        alphas = tfd_alphas(ModeFrequencies(0.8, 0.3), ThermalParams(1e6))
        assert alphas.alpha1 == 0.0 and alphas.alpha2 == 0.0

    def test_divergence_guard(self):
        # beta * omega so small that e^{-beta omega / 2} rounds to 1
        with pytest.raises(DivergenceError):
            tfd_alphas(ModeFrequencies(1.0, 1e-18), ThermalParams(1e-3))
