"""
Tests for gains, single-beam and correlation spectra, and inseparability.
"""

import math
from typing import Optional

import numpy as np
import pytest

from src.errors import NonPositive, UndefinedSpectrum
from src.models.physical_config import TWO_PI, PhysicalConfig
from src.models.transfer_solution import LangevinDiffusion, TransferSolution
from src.physics.fluctuations import build_fluctuation_system
from src.physics.observables import (
    correlation_spectra,
    gains,
    inseparability,
    single_beam_spectra,
    to_decibels,
)
from src.physics.propagation import solve_transfer
from src.physics.steady_state import solve_steady_state


def _ideal_amplifier(gain: float, input_noise: Optional[tuple[float, float, float, float]] = None) -> TransferSolution:
    """
    Frequency-flat phase-insensitive amplifier: |A|² = |D|² = G, |B|² = |C|² = G − 1.

    input_noise gives uncorrelated input-referred diffusion scalars in the
    order aa†, a†a, b†b, bb†.
    """
    cross = math.sqrt(gain - 1.0)
    direct = math.sqrt(gain)
    abcd = np.array([[direct, cross], [cross, direct]], dtype=complex)
    if input_noise is None:
        return TransferSolution.constant(abcd)
    aa_dag, dag_aa, bdag_b, b_bdag = input_noise
    noise = LangevinDiffusion.from_input(abcd, abcd.conj(), np.diag([aa_dag, bdag_b]), np.diag([dag_aa, b_bdag]))
    return TransferSolution.constant(abcd, diffusion=noise)


class TestGains:
    """Tests for the ω = 0 gains."""

    def test_identity(self):
        """Test G_a = 1 and G_b = 0 for a transparent medium."""
        assert gains(TransferSolution.identity()) == (1.0, 0.0)

    def test_amplifier(self):
        g_a, g_b = gains(_ideal_amplifier(4.0))
        assert g_a == pytest.approx(4.0)
        assert g_b == pytest.approx(3.0)


class TestSingleBeamSpectra:
    """Tests for s_xa and s_xb."""

    def test_identity_is_shot_noise(self):
        """Test that coherent light passes with shot noise on both beams."""
        assert single_beam_spectra(TransferSolution.identity()) == (pytest.approx(1.0), pytest.approx(1.0))

    @pytest.mark.parametrize("gain", [1.0, 2.0, 10.0, 100.0])
    def test_amplifier_excess_noise(self, gain):
        """Test that each amplified beam alone carries 2G − 1 times the shot noise."""
        s_xa, s_xb = single_beam_spectra(_ideal_amplifier(gain))
        assert s_xa == pytest.approx(2 * gain - 1)
        assert s_xb == pytest.approx(2 * gain - 1)

    def test_diffusion_adds_noise(self):
        """Test that Langevin diffusion raises the single-beam noise."""
        quiet = single_beam_spectra(_ideal_amplifier(3.0))
        noisy = single_beam_spectra(_ideal_amplifier(3.0, (0.2, 0.1, 0.3, 0.4)))
        assert noisy[0] > quiet[0]
        assert noisy[1] > quiet[1]

    def test_uncorrelated_noise_weights_each_input(self):
        """Test ½Σ|coefficient|²(1 + D) when the input-referred forces are uncorrelated."""
        gain = 3.0
        s_xa, s_xb = single_beam_spectra(_ideal_amplifier(gain, (0.2, 0.1, 0.3, 0.4)))
        assert s_xa == pytest.approx(0.5 * (gain * 1.2 + gain * 1.1 + (gain - 1) * 1.3 + (gain - 1) * 1.4))
        assert s_xb == pytest.approx(0.5 * ((gain - 1) * 1.2 + (gain - 1) * 1.1 + gain * 1.3 + gain * 1.4))


class TestCorrelationSpectra:
    """Tests for S_x⁻ and S_p⁺."""

    def test_identity(self):
        """Test that an untouched seed gives shot-noise correlations."""
        s_x_minus, s_p_plus = correlation_spectra(TransferSolution.identity(), TransferSolution.identity())
        assert s_x_minus == pytest.approx(1.0)
        assert s_p_plus == pytest.approx(1.0)

    @pytest.mark.parametrize("gain", [1.0, 2.0, 10.0, 100.0])
    def test_ideal_amplifier_squeezing(self, gain):
        """Test S_x⁻ = S_p⁺ = 1/(2G − 1) for the ideal linear amplifier."""
        ts = _ideal_amplifier(gain)
        s_x_minus, s_p_plus = correlation_spectra(ts, ts)
        assert s_x_minus == pytest.approx(1 / (2 * gain - 1), rel=1e-12)
        assert s_p_plus == pytest.approx(1 / (2 * gain - 1), rel=1e-12)

    def test_diffusion_degrades_correlations(self):
        """Test that positive diffusion scalars can only raise the spectra."""
        quiet = _ideal_amplifier(5.0)
        noisy = _ideal_amplifier(5.0, (0.5, 0.5, 0.5, 0.5))
        for before, after in zip(correlation_spectra(quiet, quiet), correlation_spectra(noisy, quiet)):
            assert after > before

    def test_uncorrelated_noise_weights_each_input(self):
        """Test the (1 + D) weighting of the intensity-difference terms for uncorrelated forces."""
        gain = 3.0
        ts = _ideal_amplifier(gain, (0.2, 0.1, 0.3, 0.4))
        s_x_minus, _ = correlation_spectra(ts, _ideal_amplifier(gain))
        # only the â_in and â_in† terms survive the ideal amplifier
        assert s_x_minus == pytest.approx((1.2 + 1.1) / (2 * (2 * gain - 1)), rel=1e-12)

    def test_correlated_noise_can_cancel(self):
        """Test that force noise correlated like the beams leaves the intensity difference untouched."""
        gain = 4.0
        quiet = _ideal_amplifier(gain)
        a0, c0 = quiet.a, quiet.c
        along_sum = np.array([np.conj(c0), np.conj(a0)])
        noisy = TransferSolution.constant(
            quiet.abcd, diffusion=LangevinDiffusion(direct=0.3 * np.outer(along_sum, along_sum.conj()))
        )
        s_x_minus, s_p_plus = correlation_spectra(noisy, quiet)
        assert s_x_minus == pytest.approx(1 / (2 * gain - 1), rel=1e-12)
        assert s_p_plus > 1 / (2 * gain - 1)
        assert single_beam_spectra(noisy)[0] > single_beam_spectra(quiet)[0]

    def test_vanishing_output_is_undefined(self):
        """Test that G_a + G_b = 0 raises UndefinedSpectrum."""
        dark = TransferSolution.constant(np.zeros((2, 2)))
        with pytest.raises(UndefinedSpectrum):
            correlation_spectra(TransferSolution.identity(), dark)


class TestInseparability:
    """Tests for the inseparability criterion."""

    def test_shot_noise_is_separable_boundary(self):
        assert inseparability(1.0, 1.0) == 1.0

    def test_mean_of_spectra(self):
        assert inseparability(0.5, 1.5) == pytest.approx(1.0)
        assert inseparability(0.2, 0.4) == pytest.approx(0.3)

    def test_ideal_amplifier_entangled(self):
        """Test that any gain above one gives 𝓘 < 1."""
        ts = _ideal_amplifier(2.0)
        assert inseparability(*correlation_spectra(ts, ts)) < 1.0


class TestDecibels:
    """Tests for dB conversion."""

    def test_known_values(self):
        assert to_decibels(1.0) == 0.0
        assert to_decibels(0.25) == pytest.approx(-6.0206, abs=1e-4)
        assert to_decibels(10.0) == pytest.approx(10.0)

    @pytest.mark.parametrize("value", [0.0, -1.0, float("nan")])
    def test_non_positive_rejected(self, value):
        with pytest.raises(NonPositive):
            to_decibels(value)


class TestPhysicalSpectra:
    """Tests on the strong-pump configuration."""

    @pytest.fixture
    def setup(self):
        config = PhysicalConfig.from_frequencies(
            gamma_small_hz=10e3,
            omega_rabi_hz=2e9,
            delta_big_hz=2e9,
            delta_small_hz=-217e6,
            omega_zero_hz=3e9,
            optical_depth=150,
        )
        fs = build_fluctuation_system(config, solve_steady_state(config))
        return config, fs, solve_transfer(config, fs, 0.0, langevin_enabled=False)

    def test_intensity_difference_even_in_frequency(self, setup):
        """Test S_x⁻(ω) = S_x⁻(−ω)."""
        config, fs, ts0 = setup
        omega = TWO_PI * 2e6
        plus = correlation_spectra(solve_transfer(config, fs, omega), ts0)[0]
        minus = correlation_spectra(solve_transfer(config, fs, -omega), ts0)[0]
        assert plus == pytest.approx(minus, rel=1e-6)

    def test_each_beam_above_shot_noise(self, setup):
        """Test that either output alone is noisier than shot noise."""
        config, fs, _ = setup
        s_xa, s_xb = single_beam_spectra(solve_transfer(config, fs, TWO_PI * 1e6))
        assert s_xa >= 1.0 - 1e-9
        assert s_xb >= 1.0 - 1e-9

    def test_langevin_noise_never_helps(self, setup):
        """Test that dropping the atomic noise can only lower 𝓘."""
        config, fs, ts0 = setup
        for omega_hz in (1e5, 1e6, 1e7):
            full = solve_transfer(config, fs, TWO_PI * omega_hz)
            with_noise = inseparability(*correlation_spectra(full, ts0))
            without_noise = inseparability(*correlation_spectra(full.without_diffusion(), ts0))
            assert with_noise >= without_noise
