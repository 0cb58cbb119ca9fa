"""
Tests for the zeroth-order steady state.

Covers the linear solve, its physical properties, the optical-pumping
limit and the time-evolution cross-check.
"""

import numpy as np
import pytest

from src.errors import NonConvergence, SingularSystem
from src.models.physical_config import PhysicalConfig
from src.models.steady_state import SteadyState
from src.physics.steady_state import (
    build_m0,
    build_s0,
    evolve_to_steady_state_oracle,
    evolve_trajectory,
    m0_matrix,
    pinned_steady_state,
    relaxation_scales,
    solve_steady_state,
    steady_state_for,
)


@pytest.fixture
def gain_config():
    """Moderate pump, far detuned (seed gain spectrum setup)."""
    return PhysicalConfig.from_frequencies(
        gamma_small_hz=10e3,
        omega_rabi_hz=0.3e9,
        delta_big_hz=1e9,
        omega_zero_hz=3e9,
        optical_depth=150,
    )


@pytest.fixture
def strong_pump_config():
    """Strong pump, Ω = Δ."""
    return PhysicalConfig.from_frequencies(
        gamma_small_hz=10e3,
        omega_rabi_hz=2e9,
        delta_big_hz=2e9,
        delta_small_hz=-217e6,
        omega_zero_hz=3e9,
        optical_depth=150,
    )


def _in_gamma_units(gamma_ratio: float, delta_ratio: float) -> PhysicalConfig:
    gamma_big = 2 * np.pi * 5.7e6
    return PhysicalConfig(
        gamma_big=gamma_big,
        omega_rabi=gamma_ratio * gamma_big,
        delta_big=delta_ratio * gamma_big,
        omega_zero=2 * np.pi * 3e9,
    )


class TestMatrices:
    """Tests for [M0] and |S0]."""

    def test_shapes(self, gain_config):
        """Test that M0 is 7×7 and S0 has seven entries."""
        assert build_m0(gain_config).shape == (7, 7)
        assert build_s0(gain_config).shape == (7,)

    def test_m0_entries(self):
        """Test representative entries of M0."""
        m0 = m0_matrix(1.0, 2.0, 3.0, 5.0)
        assert m0[0, 0] == pytest.approx(0.5j)
        assert m0[2, 2] == pytest.approx(1j)
        assert m0[3, 3] == pytest.approx(-3.0 + 0.5j)
        assert m0[6, 6] == pytest.approx(8.0 + 0.5j)
        assert m0[5, 1] == pytest.approx(-2.0)

    def test_s0_in_gamma_units(self, gain_config):
        """Test |S0] = ½(i, i, 0, 0, 0, −Ω, Ω) with Γ = 1."""
        s0 = build_s0(gain_config)
        ratio = gain_config.omega_rabi / gain_config.gamma_big
        assert s0[0] == pytest.approx(0.5j)
        assert s0[5] == pytest.approx(-0.5 * ratio)
        assert s0[6] == pytest.approx(0.5 * ratio)
        assert np.all(s0[2:5] == 0)


class TestSolveSteadyState:
    """Tests for solve_steady_state."""

    def test_solution_satisfies_system(self, gain_config):
        """Test that the solved vector satisfies M0·Σ0 = S0."""
        state = solve_steady_state(gain_config)
        residual = build_m0(gain_config) @ state.as_vector() - build_s0(gain_config)
        assert np.max(np.abs(residual)) < 1e-10

    def test_trace_is_one(self, gain_config):
        """Test that the four populations sum to 1."""
        state = solve_steady_state(gain_config)
        assert sum(state.populations) == pytest.approx(1.0, abs=1e-12)

    def test_state_is_physical(self, gain_config, strong_pump_config):
        """Test populations in [0, 1] and Hermitian coherences."""
        for config in (gain_config, strong_pump_config):
            state = solve_steady_state(config)
            assert state.is_physical(tol=1e-10)
            assert state.sigma13 == pytest.approx(state.sigma31.conjugate(), abs=1e-12)
            assert state.sigma24 == pytest.approx(state.sigma42.conjugate(), abs=1e-12)

    def test_excited_populations_balance(self, gain_config, strong_pump_config):
        """Test σ33 = σ44: the pump feeds both excited states at the same rate."""
        for config in (gain_config, strong_pump_config):
            state = solve_steady_state(config)
            assert state.sigma33 == pytest.approx(state.sigma44, abs=1e-12)

    def test_far_detuned_pump_empties_level_one(self, gain_config):
        """Test that the pump transfers the population into |2⟩."""
        state = solve_steady_state(gain_config)
        assert state.sigma22 > 0.9
        assert state.sigma11 < 0.1
        assert state.sigma33 < 0.01
        assert state.sigma44 < 0.01

    def test_mirror_detuning_exchanges_ground_states(self, gain_config):
        """Test that Δ → −Δ − ω0 swaps the roles of the two Λ systems."""
        state = solve_steady_state(gain_config)
        mirrored = solve_steady_state(
            gain_config.replace(delta_big=-gain_config.delta_big - gain_config.omega_zero)
        )
        assert mirrored.sigma11 == pytest.approx(state.sigma22, abs=1e-12)
        assert mirrored.sigma22 == pytest.approx(state.sigma11, abs=1e-12)
        assert mirrored.sigma33 == pytest.approx(state.sigma44, abs=1e-12)
        assert mirrored.sigma31 == pytest.approx(-state.sigma24, abs=1e-12)
        assert mirrored.sigma42 == pytest.approx(-state.sigma13, abs=1e-12)

    def test_zero_pump_is_singular(self, gain_config):
        """Test that Ω = 0 raises SingularSystem."""
        with pytest.raises(SingularSystem):
            solve_steady_state(gain_config.replace(omega_rabi=0.0))

    def test_steady_state_for_pinned(self, gain_config):
        """Test that the pinned flag bypasses the solve, even at Ω = 0."""
        state = steady_state_for(gain_config.replace(omega_rabi=0.0), pinned=True)
        assert state == SteadyState.pinned()
        assert state.populations == (0.0, 1.0, 0.0, 0.0)

    def test_steady_state_for_solves_by_default(self, gain_config):
        """Test that without the flag the pumped state is returned."""
        assert steady_state_for(gain_config) == solve_steady_state(gain_config)


class TestSteadyStateModel:
    """Tests for the SteadyState value object."""

    def test_from_vector_closes_trace(self):
        """Test that σ44 is 1 − σ11 − σ22 − σ33."""
        state = SteadyState.from_vector(np.array([0.1, 0.7, 0.05, 0.2j, -0.2j, 0, 0]))
        assert state.sigma44 == pytest.approx(0.15)

    def test_full_vector_order(self):
        """Test that σ44 follows the three solved populations."""
        state = SteadyState(0.1, 0.6, 0.15, 0.15, 1j, -1j, 2j, -2j)
        assert list(state.full_vector()) == [0.1, 0.6, 0.15, 0.15, 1j, -1j, 2j, -2j]

    def test_unphysical_state_detected(self):
        """Test that a negative population fails is_physical."""
        assert not SteadyState(-0.1, 1.1, 0.0, 0.0, 0j, 0j, 0j, 0j).is_physical()


class TestTimeEvolution:
    """Tests for the long-time integration cross-check."""

    def test_oracle_matches_solve(self, gain_config):
        """Test that time evolution settles on the linear-solve steady state."""
        solved = solve_steady_state(gain_config)
        oracle = evolve_to_steady_state_oracle(gain_config)
        assert np.max(np.abs(solved.full_vector() - oracle.full_vector())) < 1e-6

    def test_oracle_matches_solve_on_random_configs(self):
        """Test agreement on seeded random (Ω, Δ) in units of Γ."""
        rng = np.random.default_rng(2024)
        for _ in range(10):
            config = _in_gamma_units(rng.uniform(10.0, 500.0), rng.uniform(-300.0, 300.0))
            solved = solve_steady_state(config)
            oracle = evolve_to_steady_state_oracle(config)
            assert np.max(np.abs(solved.full_vector() - oracle.full_vector())) < 1e-6

    def test_trajectory_stays_physical(self, strong_pump_config):
        """Test that populations stay in [0, 1] and the trace stays 1 along the way."""
        _, states = evolve_trajectory(strong_pump_config, samples=50)
        populations = states[:, :4].real
        assert np.all(populations >= -1e-9)
        assert np.all(populations <= 1 + 1e-9)
        assert np.allclose(populations.sum(axis=1), 1.0, atol=1e-9)

    def test_trajectory_shape_and_times(self, gain_config):
        """Test samples + 1 states, starting at t = 0 and ending at t_final."""
        times, states = evolve_trajectory(gain_config, t_final=1e-6, samples=20)
        assert states.shape == (21, 8)
        assert times[0] == 0.0
        assert times[-1] == pytest.approx(1e-6)

    def test_trajectory_starts_in_level_two(self, gain_config):
        """Test the default initial state."""
        _, states = evolve_trajectory(gain_config, t_final=1e-6, samples=5)
        assert np.allclose(states[0], pinned_steady_state().full_vector())

    def test_no_pump_keeps_initial_state(self, gain_config):
        """Test that without a pump nothing moves from |2⟩."""
        config = gain_config.replace(omega_rabi=0.0)
        _, states = evolve_trajectory(config, t_final=1e-5, samples=10)
        assert np.allclose(states, pinned_steady_state().full_vector(), atol=1e-12)

    def test_no_pump_needs_explicit_duration(self, gain_config):
        """Test that a conserved mode with no t_final raises NonConvergence."""
        with pytest.raises(NonConvergence):
            evolve_trajectory(gain_config.replace(omega_rabi=0.0))

    def test_short_run_reports_drift(self, gain_config):
        """Test that stopping long before relaxation raises NonConvergence."""
        with pytest.raises(NonConvergence):
            evolve_to_steady_state_oracle(gain_config, t_final=1e-9)

    def test_relaxation_scales(self, gain_config):
        """Test that the slowest rate is positive and below the fastest."""
        slowest, fastest = relaxation_scales(gain_config)
        assert 0 < slowest < fastest
        assert relaxation_scales(gain_config.replace(omega_rabi=0.0))[0] == 0.0
