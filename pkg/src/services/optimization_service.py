"""
Optimization service: the two-photon detuning that minimises the inseparability.

The search starts from the seed-gain maximum, scans 𝓘(δ) coarsely within
±Ω of it and refines the best bracket by golden-section search.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from src.errors import ConfigValidationError, NoMinimum
from src.models.physical_config import TWO_PI, PhysicalConfig
from src.services.spectrum_service import SpectrumService

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OptimizationResult:
    """
    Outcome of a δ optimisation; detunings in rad/s.

    Attributes:
        delta_opt: Two-photon detuning with the lowest inseparability
        inseparability: 𝓘 at delta_opt
        delta_gain_max: Where the seed gain peaks (centre of the search)
    """

    delta_opt: float
    inseparability: float
    delta_gain_max: float


class OptimizationService:
    """
    Find the two-photon detuning that gives the strongest entanglement at a fixed ω.
    """

    GAIN_SCAN_POINTS: int = 401
    COARSE_POINTS: int = 81
    DELTA_TOLERANCE: float = TWO_PI * 0.1e6

    def __init__(self, spectrum_service: SpectrumService) -> None:
        """
        Initialize the optimization service.

        Args:
            spectrum_service: Evaluates gains and 𝓘 at single points
        """
        self.spectrum_service = spectrum_service

    def gain_maximum(self, config: PhysicalConfig) -> float:
        """δ (rad/s) of the largest seed gain G_a within ±Ω of two-photon resonance."""
        grid = np.linspace(-config.omega_rabi, config.omega_rabi, self.GAIN_SCAN_POINTS)
        gain = np.array([self._gain(config.replace(delta_small=float(d))) for d in grid])
        if np.all(np.isnan(gain)):
            raise NoMinimum("seed gain could not be computed anywhere in the scan", math.nan, math.nan)
        return float(grid[int(np.nanargmax(gain))])

    def inseparability(self, config: PhysicalConfig, delta: float, omega: float) -> float:
        """𝓘 at (δ, ω), NaN where it cannot be computed."""
        value = self.spectrum_service.inseparability_at(config.replace(delta_small=float(delta)), omega)
        return math.nan if value is None else float(value)

    def optimize_delta(self, config: PhysicalConfig, omega_fixed: float) -> OptimizationResult:
        """
        Minimise 𝓘(δ) at ω = omega_fixed within ±Ω of the gain maximum.

        Args:
            config: Base config (its δ is ignored)
            omega_fixed: Analysis frequency in rad/s, > 0

        Raises:
            ConfigValidationError: omega_fixed is not positive or Ω is zero
            NoMinimum: 𝓘 ≥ 1 everywhere in the bracket
        """
        if not omega_fixed > 0.0:
            raise ConfigValidationError("omega", f"must be > 0, got {omega_fixed:g}")
        if config.omega_rabi == 0.0:
            raise ConfigValidationError("omega_rabi", "δ optimisation needs a pump (Ω > 0)")

        centre = self.gain_maximum(config)
        grid = np.linspace(centre - config.omega_rabi, centre + config.omega_rabi, self.COARSE_POINTS)
        values = np.array([self.inseparability(config, d, omega_fixed) for d in grid])
        if np.all(np.isnan(values)):
            raise NoMinimum("inseparability could not be computed anywhere in the bracket", math.nan, math.nan)

        k = int(np.nanargmin(values))
        logger.info("coarse 𝓘 minimum %.4f at δ/2π = %.4g Hz", values[k], grid[k] / TWO_PI)
        delta_opt, best = float(grid[k]), float(values[k])
        if 0 < k < len(grid) - 1:
            delta_opt, best = self._refine(config, omega_fixed, grid[k - 1], grid[k], grid[k + 1], (delta_opt, best))

        if not best < 1.0:
            raise NoMinimum(
                f"no entanglement within ±Ω of the gain maximum (best 𝓘 = {best:.4f})", delta_opt, best
            )
        return OptimizationResult(delta_opt=delta_opt, inseparability=best, delta_gain_max=centre)

    def _refine(
        self,
        config: PhysicalConfig,
        omega: float,
        lower: float,
        middle: float,
        upper: float,
        fallback: tuple[float, float],
    ) -> tuple[float, float]:
        # Golden section works with a relative tolerance; on x = 1 + (δ − middle)/width
        # it becomes an absolute tolerance of DELTA_TOLERANCE on δ.
        width = upper - lower

        def objective(x: float) -> float:
            value = self.inseparability(config, middle + (x - 1.0) * width, omega)
            return math.inf if math.isnan(value) else value

        bracket = (1.0 + (lower - middle) / width, 1.0, 1.0 + (upper - middle) / width)
        try:
            result = minimize_scalar(
                objective, bracket=bracket, method="golden", tol=self.DELTA_TOLERANCE / (2.0 * width)
            )
        except ValueError as exc:
            logger.debug("golden refinement skipped: %s", exc)
            return fallback
        if not result.fun < fallback[1]:
            return fallback
        return middle + (float(result.x) - 1.0) * width, float(result.fun)

    def _gain(self, config: PhysicalConfig) -> float:
        try:
            return self.spectrum_service.gains(config)[0]
        except ValueError as exc:
            logger.debug("gain at δ = %.6g rad/s failed: %s", config.delta_small, exc)
            return math.nan
