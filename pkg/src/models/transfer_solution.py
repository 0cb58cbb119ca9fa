"""Input-output transfer solution of the seed/conjugate propagation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np


def _covariance(value: Optional[np.ndarray]) -> np.ndarray:
    matrix = np.zeros((2, 2), dtype=complex) if value is None else np.array(value, dtype=complex)
    if matrix.shape != (2, 2):
        raise ValueError(f"force covariance must be 2×2, got {matrix.shape}")
    matrix = 0.5 * (matrix + matrix.conj().T)
    matrix.setflags(write=False)
    return matrix


@dataclass(frozen=True, eq=False)
class LangevinDiffusion:
    """
    Atom-driven noise carried by the output fields at ω.

    direct is the covariance of the integrated Langevin forces on
    (â(ω), b̂†(ω)) at the output face; adjoint is the same for
    (â†(ω), b̂(ω)), whose propagator is e^{M*(−ω)}. Both are Hermitian and
    bounded by the medium, and the spectra project them directly.

    The four scalars are the diagonals of those covariances referred back
    to the input (ABCD⁻¹ · cov · ABCD⁻†): aa_dag and bdag_b from the direct
    chain, dag_aa and b_bdag from the adjoint chain, the values the spectra
    label D_{a†a}(−ω) and D_{bb†}(−ω). They grow without bound on a strongly
    absorbed channel and are reported, not used for the spectra.
    """

    direct: Optional[np.ndarray] = None
    adjoint: Optional[np.ndarray] = None
    aa_dag: float = 0.0
    dag_aa: float = 0.0
    bdag_b: float = 0.0
    b_bdag: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "direct", _covariance(self.direct))
        object.__setattr__(self, "adjoint", _covariance(self.adjoint))

    @classmethod
    def from_input(
        cls,
        abcd: np.ndarray,
        abcd_conj: np.ndarray,
        direct_input: np.ndarray,
        adjoint_input: np.ndarray,
    ) -> "LangevinDiffusion":
        """Propagate input-referred force covariances through the two chains."""
        abcd = np.asarray(abcd, dtype=complex)
        abcd_conj = np.asarray(abcd_conj, dtype=complex)
        direct_input = np.asarray(direct_input, dtype=complex)
        adjoint_input = np.asarray(adjoint_input, dtype=complex)
        return cls(
            direct=abcd @ direct_input @ abcd.conj().T,
            adjoint=abcd_conj @ adjoint_input @ abcd_conj.conj().T,
            aa_dag=float(direct_input[0, 0].real),
            dag_aa=float(adjoint_input[0, 0].real),
            bdag_b=float(direct_input[1, 1].real),
            b_bdag=float(adjoint_input[1, 1].real),
        )

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.aa_dag, self.dag_aa, self.bdag_b, self.b_bdag)

    def is_zero(self) -> bool:
        return not (np.any(self.direct) or np.any(self.adjoint) or any(self.as_tuple()))

    def exchanged(self) -> "LangevinDiffusion":
        """The same noise with seed and conjugate swapped: (â, b̂†) ↔ (b̂, â†)."""
        return LangevinDiffusion(
            direct=self.adjoint[::-1, ::-1],
            adjoint=self.direct[::-1, ::-1],
            aa_dag=self.b_bdag,
            dag_aa=self.bdag_b,
            bdag_b=self.dag_aa,
            b_bdag=self.aa_dag,
        )


@dataclass(frozen=True, eq=False)
class TransferSolution:
    """
    Output fields in terms of input fields at one analysis frequency.

    Attributes:
        omega: Analysis frequency ω (rad/s)
        abcd: [[A(ω), B(ω)], [C(ω), D(ω)]] = e^{M(ω)}
        abcd_conj: e^{M*(−ω)}, the propagator of (a†(ω), b(ω))
        diffusion: Atom-driven output noise paired with abcd and abcd_conj
    """

    omega: float
    abcd: np.ndarray
    abcd_conj: np.ndarray
    diffusion: LangevinDiffusion = LangevinDiffusion()

    def __post_init__(self) -> None:
        for name in ("abcd", "abcd_conj"):
            value = np.array(getattr(self, name), dtype=complex)
            if value.shape != (2, 2):
                raise ValueError(f"{name} must be 2×2, got {value.shape}")
            value.setflags(write=False)
            object.__setattr__(self, name, value)

    @classmethod
    def identity(cls, omega: float = 0.0) -> "TransferSolution":
        """Transparent, noiseless medium (OD = 0)."""
        return cls(omega=omega, abcd=np.eye(2), abcd_conj=np.eye(2))

    @classmethod
    def constant(
        cls,
        abcd: np.ndarray,
        omega: float = 0.0,
        diffusion: LangevinDiffusion = LangevinDiffusion(),
    ) -> "TransferSolution":
        """Frequency-flat transfer (e.g. an ideal linear amplifier): A(−ω) = A(ω)."""
        abcd = np.asarray(abcd, dtype=complex)
        return cls(omega=omega, abcd=abcd, abcd_conj=abcd.conj(), diffusion=diffusion)

    @property
    def a(self) -> complex:
        return complex(self.abcd[0, 0])

    @property
    def b(self) -> complex:
        return complex(self.abcd[0, 1])

    @property
    def c(self) -> complex:
        return complex(self.abcd[1, 0])

    @property
    def d(self) -> complex:
        return complex(self.abcd[1, 1])

    def mirrored(self) -> np.ndarray:
        """[[A(−ω), B(−ω)], [C(−ω), D(−ω)]], recovered from abcd_conj."""
        return self.abcd_conj.conj()

    def without_diffusion(self) -> "TransferSolution":
        return TransferSolution(omega=self.omega, abcd=self.abcd, abcd_conj=self.abcd_conj)
