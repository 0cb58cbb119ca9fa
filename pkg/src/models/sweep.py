"""Sweep definitions and the run manifest consumed by the sweep service."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Iterator, Optional

import numpy as np

from src.errors import ConfigValidationError
from src.models.physical_config import TWO_PI, PhysicalConfig

ALLOWED_QUAD_ORDERS: tuple[int, ...] = (16, 32, 64, 128, 256)
DEFAULT_QUAD_ORDER: int = 64
MAX_SWEEP_AXES: int = 2


class SweepAxis(str, Enum):
    """
    Parameter a sweep runs over.

    Attributes:
        DELTA_SMALL: Two-photon detuning δ
        OMEGA: Analysis frequency ω
        GAMMA_SMALL: Ground-coherence decay rate γ
        OMEGA_RABI: Pump Rabi frequency Ω
        DELTA_BIG: One-photon detuning Δ
    """

    DELTA_SMALL = "delta_small"
    OMEGA = "omega"
    GAMMA_SMALL = "gamma_small"
    OMEGA_RABI = "omega_rabi"
    DELTA_BIG = "delta_big"


class SweepScale(str, Enum):
    LINEAR = "linear"
    LOG = "log"


@dataclass(frozen=True)
class SweepSpec:
    """
    Inclusive grid over one axis; start and stop are angular frequencies (rad/s).
    """

    axis: SweepAxis
    start: float
    stop: float
    points: int
    scale: SweepScale = SweepScale.LINEAR

    def __post_init__(self) -> None:
        object.__setattr__(self, "axis", SweepAxis(self.axis))
        object.__setattr__(self, "scale", SweepScale(self.scale))
        if not np.isfinite(self.start) or not np.isfinite(self.stop):
            raise ConfigValidationError("sweep", "start and stop must be finite")
        if not self.start < self.stop:
            raise ConfigValidationError("sweep", f"start must be < stop, got {self.start:g} >= {self.stop:g}")
        if int(self.points) != self.points or self.points < 2:
            raise ConfigValidationError("sweep", f"points must be an integer >= 2, got {self.points}")
        if self.scale is SweepScale.LOG and self.start <= 0:
            raise ConfigValidationError("sweep", "log scale requires start > 0")
        object.__setattr__(self, "points", int(self.points))

    @classmethod
    def parse(cls, text: str) -> "SweepSpec":
        """
        Parse `axis:start:stop:points[:scale]` with start and stop in Hz.

        Example: "omega:1e4:1e8:200:log"
        """
        parts = [p.strip() for p in (text or "").split(":")]
        if len(parts) not in (4, 5):
            raise ConfigValidationError("sweep", f"expected axis:start:stop:points[:scale], got {text!r}")
        axis, start, stop, points = parts[:4]
        scale = parts[4] if len(parts) == 5 else SweepScale.LINEAR.value
        try:
            axis_value = SweepAxis(axis)
        except ValueError as exc:
            choices = ", ".join(a.value for a in SweepAxis)
            raise ConfigValidationError("sweep", f"unknown axis {axis!r}; choose from {choices}") from exc
        try:
            scale_value = SweepScale(scale)
        except ValueError as exc:
            raise ConfigValidationError("sweep", f"unknown scale {scale!r}; use linear or log") from exc
        try:
            start_hz, stop_hz = float(start), float(stop)
            count = int(points)
        except ValueError as exc:
            raise ConfigValidationError("sweep", f"non-numeric bound or point count in {text!r}") from exc
        return cls(axis_value, TWO_PI * start_hz, TWO_PI * stop_hz, count, scale_value)

    def values(self) -> np.ndarray:
        """Grid values in rad/s, ascending."""
        if self.scale is SweepScale.LOG:
            return np.geomspace(self.start, self.stop, self.points)
        return np.linspace(self.start, self.stop, self.points)


@dataclass(frozen=True)
class GridPoint:
    """Fully resolved inputs of one sweep point."""

    index: int
    config: PhysicalConfig
    omega: float

    @property
    def delta_small(self) -> float:
        return self.config.delta_small


@dataclass(frozen=True)
class RunManifest:
    """
    Everything a sweep run needs.

    Attributes:
        config: Base physical config (swept fields are overridden per point)
        sweeps: Up to two sweeps, outer first
        langevin_enabled: Include the atomic Langevin diffusion in the spectra
        quad_order: Initial Gauss-Legendre order for the diffusion integrals
        output_path: CSV destination (None: do not write)
        omega: Analysis frequency (rad/s) used when ω is not swept
        pinned_ground_state: Use σ22 = 1 instead of solving the pumped steady state
        seed_scan: Exchange seed and conjugate roles on the far side of the δ axis
    """

    config: PhysicalConfig = field(default_factory=PhysicalConfig)
    sweeps: tuple[SweepSpec, ...] = ()
    langevin_enabled: bool = True
    quad_order: int = DEFAULT_QUAD_ORDER
    output_path: Optional[str] = None
    omega: float = 0.0
    pinned_ground_state: bool = False
    seed_scan: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "sweeps", tuple(self.sweeps))
        if len(self.sweeps) > MAX_SWEEP_AXES:
            raise ConfigValidationError("sweeps", f"at most {MAX_SWEEP_AXES} sweep axes, got {len(self.sweeps)}")
        axes = [s.axis for s in self.sweeps]
        if len(set(axes)) != len(axes):
            raise ConfigValidationError("sweeps", "the same axis cannot be swept twice")
        if self.quad_order not in ALLOWED_QUAD_ORDERS:
            raise ConfigValidationError("quad_order", f"must be one of {ALLOWED_QUAD_ORDERS}, got {self.quad_order}")
        if not np.isfinite(self.omega):
            raise ConfigValidationError("omega", "must be finite")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(s.points for s in self.sweeps)

    @property
    def size(self) -> int:
        return int(np.prod(self.shape)) if self.sweeps else 1

    def grid(self) -> Iterator[GridPoint]:
        """Grid points in outer-major order."""
        value_lists = [s.values() for s in self.sweeps]
        for index, combo in enumerate(product(*value_lists)):
            config = self.config
            omega = self.omega
            changes: dict[str, float] = {}
            for spec, value in zip(self.sweeps, combo):
                if spec.axis is SweepAxis.OMEGA:
                    omega = float(value)
                else:
                    changes[spec.axis.value] = float(value)
            if changes:
                config = config.replace(**changes)
            yield GridPoint(index=index, config=config, omega=omega)
