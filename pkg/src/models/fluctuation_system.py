"""First-order coherence system and its Langevin diffusion matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class FluctuationSystem:
    """
    Linear system for the coherences (σ23, σ41, σ43, σ21), in units of Γ.

    Attributes:
        m1: 4×4 matrix [M1] at the config's two-photon detuning
        s1: 4×2 source matrix [S1] without the coupling g (columns couple to â, b̂†)
        d1: 4×4 diffusion matrix [D1]
        d2: 4×4 diffusion matrix [D2]
        d_total: [D] = [D1] + [D2]
    """

    m1: np.ndarray
    s1: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    d_total: np.ndarray

    def __post_init__(self) -> None:
        for name, shape in (("m1", (4, 4)), ("s1", (4, 2)), ("d1", (4, 4)), ("d2", (4, 4)), ("d_total", (4, 4))):
            value = np.array(getattr(self, name), dtype=complex)
            if value.shape != shape:
                raise ValueError(f"{name} must have shape {shape}, got {value.shape}")
            value.setflags(write=False)
            object.__setattr__(self, name, value)

    def with_diffusion(self, d1: np.ndarray, d2: np.ndarray) -> "FluctuationSystem":
        return FluctuationSystem(m1=self.m1, s1=self.s1, d1=d1, d2=d2, d_total=np.asarray(d1) + np.asarray(d2))

    def without_source(self) -> "FluctuationSystem":
        return FluctuationSystem(m1=self.m1, s1=np.zeros((4, 2), dtype=complex), d1=self.d1, d2=self.d2, d_total=self.d_total)
