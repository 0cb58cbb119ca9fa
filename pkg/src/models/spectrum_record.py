"""One row of a gain / noise-spectrum sweep."""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict

from src.models.physical_config import TWO_PI
from src.physics.observables import to_decibels

NAN = float("nan")

CSV_COLUMNS: tuple[str, ...] = (
    "delta_small_hz",
    "omega_hz",
    "gain_a",
    "gain_b",
    "s_x_minus_db",
    "s_p_plus_db",
    "inseparability",
    "s_xa",
    "s_pa",
    "s_xb",
    "s_pb",
    "error",
)


@dataclass(frozen=True)
class SpectrumRecord:
    """
    Gains and SQL-normalized spectra at one (δ, ω) point.

    delta_small and omega are angular frequencies (rad/s). Values that
    could not be computed are NaN and `error` says why.
    """

    delta_small: float
    omega: float
    gain_a: float = NAN
    gain_b: float = NAN
    s_x_minus: float = NAN
    s_p_plus: float = NAN
    inseparability: float = NAN
    s_xa: float = NAN
    s_pa: float = NAN
    s_xb: float = NAN
    s_pb: float = NAN
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error

    @property
    def entangled(self) -> bool:
        return self.inseparability < 1.0

    def to_row(self) -> dict[str, float | str]:
        """CSV row: frequencies in Hz, correlation spectra in dB."""
        return {
            "delta_small_hz": self.delta_small / TWO_PI,
            "omega_hz": self.omega / TWO_PI,
            "gain_a": self.gain_a,
            "gain_b": self.gain_b,
            "s_x_minus_db": _db_or_nan(self.s_x_minus),
            "s_p_plus_db": _db_or_nan(self.s_p_plus),
            "inseparability": self.inseparability,
            "s_xa": self.s_xa,
            "s_pa": self.s_pa,
            "s_xb": self.s_xb,
            "s_pb": self.s_pb,
            "error": self.error,
        }

    def as_dict(self) -> dict[str, float | str]:
        return asdict(self)


def _db_or_nan(value: float) -> float:
    if math.isnan(value) or value <= 0.0:
        return NAN
    return to_decibels(value)
