"""
Spectrum service: gains and noise spectra at a single (δ, ω) point.

This service chains the physics operations (steady state, coherence
system, propagation, observables) and turns failures into flagged records.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Optional

from src.errors import SimulationError
from src.models.fluctuation_system import FluctuationSystem
from src.models.physical_config import PhysicalConfig
from src.models.spectrum_record import SpectrumRecord
from src.models.steady_state import SteadyState
from src.models.sweep import DEFAULT_QUAD_ORDER
from src.models.transfer_solution import TransferSolution
from src.physics.fluctuations import build_fluctuation_system
from src.physics.observables import correlation_spectra, gains, inseparability, single_beam_spectra
from src.physics.propagation import exchange_roles, solve_transfer
from src.physics.steady_state import evolve_to_steady_state_oracle, steady_state_for

logger = logging.getLogger(__name__)

CACHE_SIZE: int = 128


class SpectrumService:
    """
    Evaluate SpectrumRecords for one set of run options.

    Steady states, coherence systems and ω = 0 solutions depend only on
    the config, so they are cached per config: an ω sweep solves them once.
    Each cache keeps the CACHE_SIZE most recently used configs.
    """

    def __init__(
        self,
        quad_order: int = DEFAULT_QUAD_ORDER,
        langevin_enabled: bool = True,
        pinned_ground_state: bool = False,
    ) -> None:
        """
        Initialize the spectrum service.

        Args:
            quad_order: Initial Gauss-Legendre order for the diffusion integrals
            langevin_enabled: Include the atomic Langevin diffusion
            pinned_ground_state: Use σ22 = 1 instead of the pumped steady state
        """
        self.quad_order = quad_order
        self.langevin_enabled = langevin_enabled
        self.pinned_ground_state = pinned_ground_state
        self._system = lru_cache(maxsize=CACHE_SIZE)(self._build_system)
        self._zero = lru_cache(maxsize=CACHE_SIZE)(self._build_zero)

    def options(self) -> dict[str, object]:
        """Constructor arguments, to rebuild an equivalent service in a worker."""
        return {
            "quad_order": self.quad_order,
            "langevin_enabled": self.langevin_enabled,
            "pinned_ground_state": self.pinned_ground_state,
        }

    def steady_state(self, config: PhysicalConfig) -> SteadyState:
        return self._system(config)[0]

    def steady_state_check(self, config: PhysicalConfig) -> tuple[SteadyState, SteadyState]:
        """(solved, time-integrated) steady states of the config, for cross-checking."""
        return self.steady_state(config), evolve_to_steady_state_oracle(config)

    def fluctuation_system(self, config: PhysicalConfig) -> FluctuationSystem:
        return self._system(config)[1]

    def _build_system(self, config: PhysicalConfig) -> tuple[SteadyState, FluctuationSystem]:
        ss = steady_state_for(config, pinned=self.pinned_ground_state)
        return ss, build_fluctuation_system(config, ss)

    def _build_zero(self, config: PhysicalConfig) -> TransferSolution:
        return solve_transfer(
            config, self.fluctuation_system(config), 0.0, self.quad_order, langevin_enabled=False
        )

    def zero_frequency(self, config: PhysicalConfig) -> TransferSolution:
        """Transfer solution at ω = 0 (gains only, no diffusion)."""
        return self._zero(config)

    def transfer(self, config: PhysicalConfig, omega: float) -> TransferSolution:
        """Full transfer solution at ω (rad/s), with diffusion when enabled."""
        return solve_transfer(
            config,
            self.fluctuation_system(config),
            omega,
            self.quad_order,
            langevin_enabled=self.langevin_enabled,
        )

    def gains(self, config: PhysicalConfig) -> tuple[float, float]:
        """(G_a, G_b) of the config."""
        return gains(self.zero_frequency(config))

    def evaluate_point(
        self,
        config: PhysicalConfig,
        omega: float = 0.0,
        seed_scan: bool = False,
    ) -> SpectrumRecord:
        """
        Compute one SpectrumRecord.

        With seed_scan, a two-photon detuning below −ω0 addresses the second
        Λ system: the point is solved at δ₂ = −δ − 2ω0 and seed and conjugate
        exchange roles.

        Errors do not propagate: whatever was computed is kept and the
        record's error column says what failed.
        """
        values: dict[str, float] = {}
        try:
            solved_config, exchanged = self._addressed(config, seed_scan)
            ts0 = self.zero_frequency(solved_config)
            ts = ts0 if omega == 0.0 and not self.langevin_enabled else self.transfer(solved_config, omega)
            if exchanged:
                ts0, ts = exchange_roles(ts0), exchange_roles(ts)

            values["gain_a"], values["gain_b"] = gains(ts0)
            s_xa, s_xb = single_beam_spectra(ts)
            values.update(s_xa=s_xa, s_pa=s_xa, s_xb=s_xb, s_pb=s_xb)
            s_x_minus, s_p_plus = correlation_spectra(ts, ts0)
            values.update(
                s_x_minus=s_x_minus,
                s_p_plus=s_p_plus,
                inseparability=inseparability(s_x_minus, s_p_plus),
            )
        except SimulationError as exc:
            logger.warning(
                "point δ = %.6g rad/s, ω = %.6g rad/s failed: %s", config.delta_small, omega, exc
            )
            return SpectrumRecord(delta_small=config.delta_small, omega=omega, error=str(exc), **values)
        return SpectrumRecord(delta_small=config.delta_small, omega=omega, **values)

    def inseparability_at(self, config: PhysicalConfig, omega: float) -> Optional[float]:
        """𝓘 at one point, or None when the point could not be computed."""
        record = self.evaluate_point(config, omega)
        return record.inseparability if record.ok else None

    @staticmethod
    def _addressed(config: PhysicalConfig, seed_scan: bool) -> tuple[PhysicalConfig, bool]:
        if seed_scan and config.delta_small < -config.omega_zero:
            return config.replace(delta_small=-config.delta_small - 2.0 * config.omega_zero), True
        return config, False
