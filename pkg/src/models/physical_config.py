"""Physical parameters of the double-Λ medium and their derived constants."""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace as dc_replace
from typing import ClassVar

from src.errors import ConfigValidationError

TWO_PI: float = 2.0 * math.pi

# Default parameter set: cold 85Rb D1 line, OD = 150
DEFAULT_GAMMA_BIG_HZ: float = 5.7e6
DEFAULT_GAMMA_SMALL_HZ: float = 10e3
DEFAULT_OMEGA_RABI_HZ: float = 0.3e9
DEFAULT_DELTA_BIG_HZ: float = 1.0e9
DEFAULT_DELTA_SMALL_HZ: float = 0.0
DEFAULT_OMEGA_ZERO_HZ: float = 3.0e9
DEFAULT_OPTICAL_DEPTH: float = 150.0
DEFAULT_LENGTH_M: float = 0.01


@dataclass(frozen=True)
class PhysicalConfig:
    """
    All atomic and laser parameters, in laboratory units.

    Rates and detunings are angular frequencies (rad/s); the medium is
    described by its optical depth, the length only keeps units honest.

    Attributes:
        gamma_big: Excited-state decay rate Γ
        gamma_small: Ground-coherence decay rate γ
        omega_rabi: Pump Rabi frequency Ω
        delta_big: One-photon pump detuning Δ
        delta_small: Two-photon detuning δ
        omega_zero: Level offset ω0 = ω21 − ω43
        optical_depth: OD = 𝒩 σ0 L
        length: Medium length L in meters
    """

    gamma_big: float = TWO_PI * DEFAULT_GAMMA_BIG_HZ
    gamma_small: float = TWO_PI * DEFAULT_GAMMA_SMALL_HZ
    omega_rabi: float = TWO_PI * DEFAULT_OMEGA_RABI_HZ
    delta_big: float = TWO_PI * DEFAULT_DELTA_BIG_HZ
    delta_small: float = TWO_PI * DEFAULT_DELTA_SMALL_HZ
    omega_zero: float = TWO_PI * DEFAULT_OMEGA_ZERO_HZ
    optical_depth: float = DEFAULT_OPTICAL_DEPTH
    length: float = DEFAULT_LENGTH_M

    # field -> (lower bound, bound is strict); None means any finite value
    _BOUNDS: ClassVar[dict[str, tuple[float, bool] | None]] = {
        "gamma_big": (0.0, True),
        "gamma_small": (0.0, False),
        "omega_rabi": (0.0, False),
        "delta_big": None,
        "delta_small": None,
        "omega_zero": None,
        "optical_depth": (0.0, False),
        "length": (0.0, True),
    }

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            try:
                value = float(value)
            except (TypeError, ValueError) as exc:
                raise ConfigValidationError(f.name, f"not a number: {value!r}") from exc
            if not math.isfinite(value):
                raise ConfigValidationError(f.name, f"must be finite, got {value}")
            bound = self._BOUNDS[f.name]
            if bound is not None:
                lower, strict = bound
                if strict and value <= lower:
                    raise ConfigValidationError(f.name, f"must be > {lower:g}, got {value:g}")
                if not strict and value < lower:
                    raise ConfigValidationError(f.name, f"must be >= {lower:g}, got {value:g}")
            object.__setattr__(self, f.name, value)

    @classmethod
    def from_frequencies(
        cls,
        gamma_big_hz: float = DEFAULT_GAMMA_BIG_HZ,
        gamma_small_hz: float = DEFAULT_GAMMA_SMALL_HZ,
        omega_rabi_hz: float = DEFAULT_OMEGA_RABI_HZ,
        delta_big_hz: float = DEFAULT_DELTA_BIG_HZ,
        delta_small_hz: float = DEFAULT_DELTA_SMALL_HZ,
        omega_zero_hz: float = DEFAULT_OMEGA_ZERO_HZ,
        optical_depth: float = DEFAULT_OPTICAL_DEPTH,
        length_m: float = DEFAULT_LENGTH_M,
    ) -> "PhysicalConfig":
        """Build a config from ordinary frequencies (Hz); every rate is multiplied by 2π."""
        return cls(
            gamma_big=TWO_PI * gamma_big_hz,
            gamma_small=TWO_PI * gamma_small_hz,
            omega_rabi=TWO_PI * omega_rabi_hz,
            delta_big=TWO_PI * delta_big_hz,
            delta_small=TWO_PI * delta_small_hz,
            omega_zero=TWO_PI * omega_zero_hz,
            optical_depth=optical_depth,
            length=length_m,
        )

    def to_frequencies(self) -> dict[str, float]:
        """Inverse of from_frequencies, keyed like the config file."""
        return {
            "gamma_big_hz": self.gamma_big / TWO_PI,
            "gamma_small_hz": self.gamma_small / TWO_PI,
            "omega_rabi_hz": self.omega_rabi / TWO_PI,
            "delta_big_hz": self.delta_big / TWO_PI,
            "delta_small_hz": self.delta_small / TWO_PI,
            "omega_zero_hz": self.omega_zero / TWO_PI,
            "optical_depth": self.optical_depth,
            "length_m": self.length,
        }

    def replace(self, **changes: float) -> "PhysicalConfig":
        """Return a validated copy with some fields changed."""
        return dc_replace(self, **changes)


@dataclass(frozen=True)
class DerivedConstants:
    """
    Constants derived from a config.

    Attributes:
        coupling: κ = g²𝒩L/c, calibrated as OD·Γ/4 (rad/s)
        tau: τ = 2Γ² + 4Ω² + 4ω0² + 8Δ² + 8Δω0 (rad²/s²)
    """

    coupling: float
    tau: float


@dataclass(frozen=True)
class GammaUnits:
    """
    Dimensionless parameters: rates in units of Γ, position in units of L.

    kappa is the exponent prefactor of the field propagation over z ∈ [0, 1].
    """

    gamma_small: float
    omega_rabi: float
    delta_big: float
    delta_small: float
    omega_zero: float
    optical_depth: float

    @property
    def kappa(self) -> float:
        return self.optical_depth / 4.0

    @property
    def tau(self) -> float:
        return tau_formula(1.0, self.omega_rabi, self.delta_big, self.omega_zero)


def tau_formula(gamma_big: float, omega_rabi: float, delta_big: float, omega_zero: float) -> float:
    """τ = 2Γ² + 4Ω² + 4ω0² + 8Δ² + 8Δω0."""
    return (
        2.0 * gamma_big**2
        + 4.0 * omega_rabi**2
        + 4.0 * omega_zero**2
        + 8.0 * delta_big**2
        + 8.0 * delta_big * omega_zero
    )


def derive_constants(config: PhysicalConfig) -> DerivedConstants:
    """
    Derive κ and τ from a validated config.

    The coupling is calibrated so that a weak probe on a transition whose
    lower level holds all the population is attenuated in intensity by
    exp(−OD) on resonance.
    """
    tau = tau_formula(config.gamma_big, config.omega_rabi, config.delta_big, config.omega_zero)
    if not tau > 0.0:
        # 2Γ² + 4Ω² + 4(Δ + ω0)² + 4Δ² > 0 whenever Γ > 0
        raise ConfigValidationError("tau", f"must be > 0, got {tau:g}")
    return DerivedConstants(coupling=config.optical_depth * config.gamma_big / 4.0, tau=tau)


def to_internal(config: PhysicalConfig) -> GammaUnits:
    """Express a config in units where Γ = 1 and the medium spans z ∈ [0, 1]."""
    scale = config.gamma_big
    return GammaUnits(
        gamma_small=config.gamma_small / scale,
        omega_rabi=config.omega_rabi / scale,
        delta_big=config.delta_big / scale,
        delta_small=config.delta_small / scale,
        omega_zero=config.omega_zero / scale,
        optical_depth=config.optical_depth,
    )


def from_internal(units: GammaUnits, gamma_big: float, length: float) -> PhysicalConfig:
    """Inverse of to_internal, given the Γ and L that were scaled out."""
    return PhysicalConfig(
        gamma_big=gamma_big,
        gamma_small=units.gamma_small * gamma_big,
        omega_rabi=units.omega_rabi * gamma_big,
        delta_big=units.delta_big * gamma_big,
        delta_small=units.delta_small * gamma_big,
        omega_zero=units.omega_zero * gamma_big,
        optical_depth=units.optical_depth,
        length=length,
    )


def optical_depth_from_density(density_cm3: float, cross_section_cm2: float, length_m: float) -> float:
    """OD = 𝒩 σ0 L with 𝒩 in cm⁻³, σ0 in cm² and L in meters."""
    if density_cm3 < 0 or cross_section_cm2 < 0 or length_m <= 0:
        raise ConfigValidationError(
            "optical_depth", "density and cross section must be >= 0 and length > 0"
        )
    return density_cm3 * cross_section_cm2 * (length_m * 100.0)
