"""Pump-driven steady state of the four-level medium."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SteadyState:
    """
    Mean populations and pump coherences at zeroth order in the weak fields.

    The 7-vector ordering of the solved values is
    (σ11, σ22, σ33, σ31, σ13, σ42, σ24); σ44 closes the trace.
    """

    sigma11: float
    sigma22: float
    sigma33: float
    sigma44: float
    sigma31: complex
    sigma13: complex
    sigma42: complex
    sigma24: complex

    @classmethod
    def from_vector(cls, vector: np.ndarray) -> "SteadyState":
        """Build from the solved 7-vector; populations keep their real part."""
        s11, s22, s33 = (float(np.real(vector[k])) for k in range(3))
        return cls(
            sigma11=s11,
            sigma22=s22,
            sigma33=s33,
            sigma44=1.0 - s11 - s22 - s33,
            sigma31=complex(vector[3]),
            sigma13=complex(vector[4]),
            sigma42=complex(vector[5]),
            sigma24=complex(vector[6]),
        )

    @classmethod
    def pinned(cls) -> "SteadyState":
        """All atoms optically pumped into |2⟩, no pump coherence."""
        return cls(0.0, 1.0, 0.0, 0.0, 0j, 0j, 0j, 0j)

    def as_vector(self) -> np.ndarray:
        """The 7-vector (σ11, σ22, σ33, σ31, σ13, σ42, σ24)."""
        return np.array(
            [
                self.sigma11,
                self.sigma22,
                self.sigma33,
                self.sigma31,
                self.sigma13,
                self.sigma42,
                self.sigma24,
            ],
            dtype=complex,
        )

    def full_vector(self) -> np.ndarray:
        """All eight values, σ44 appended after the populations."""
        return np.array(
            [
                self.sigma11,
                self.sigma22,
                self.sigma33,
                self.sigma44,
                self.sigma31,
                self.sigma13,
                self.sigma42,
                self.sigma24,
            ],
            dtype=complex,
        )

    @property
    def populations(self) -> tuple[float, float, float, float]:
        return (self.sigma11, self.sigma22, self.sigma33, self.sigma44)

    def is_physical(self, tol: float = 1e-10) -> bool:
        """Populations in [0, 1] (within tol), unit trace, Hermitian coherences."""
        pops = np.array(self.populations)
        return bool(
            np.all(pops >= -tol)
            and np.all(pops <= 1.0 + tol)
            and abs(pops.sum() - 1.0) <= tol
            and abs(self.sigma13 - self.sigma31.conjugate()) <= tol
            and abs(self.sigma24 - self.sigma42.conjugate()) <= tol
        )
