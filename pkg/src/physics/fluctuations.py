"""
First-order coherence system driven by the seed (â) and conjugate (b̂†) fields.

Unknowns are the Fourier components of (σ23, σ41, σ43, σ21) at analysis
frequency ω. They obey ([M1] + ω)|Σ1] = −g[S1](â, b̂†) + noise, with the
noise characterised by the diffusion matrices [D1] and [D2].
Everything here is in units of Γ.
"""

from __future__ import annotations

import numpy as np

from src.models.fluctuation_system import FluctuationSystem
from src.models.physical_config import GammaUnits, PhysicalConfig, to_internal
from src.models.steady_state import SteadyState


def m1_matrix(units: GammaUnits) -> np.ndarray:
    """[M1] at the two-photon detuning of `units`."""
    w = 0.5 * units.omega_rabi
    d = units.delta_big
    ds = units.delta_small
    w0 = units.omega_zero
    g = units.gamma_small
    return np.array(
        [
            [0.5j + (d - ds), 0, -w, w],
            [0, 0.5j - (d + ds + w0), w, -w],
            [-w, w, 1j - (ds + w0), 0],
            [w, -w, 0, 1j * g - ds],
        ],
        dtype=complex,
    )


def s1_matrix(ss: SteadyState) -> np.ndarray:
    """
    [S1] from the steady state, without the coupling g.

    Column 0 multiplies â, column 1 multiplies b̂†.
    """
    return np.array(
        [
            [ss.sigma33 - ss.sigma22, 0],
            [0, ss.sigma11 - ss.sigma44],
            [-ss.sigma42, ss.sigma13],
            [ss.sigma31, -ss.sigma24],
        ],
        dtype=complex,
    )


def diffusion_matrices(units: GammaUnits) -> tuple[np.ndarray, np.ndarray]:
    """
    ([D1], [D2]) for the coherences (σ23, σ41, σ43, σ21).

    Both depend on the config only; every entry carries 1/(2τ).
    """
    w = units.omega_rabi
    d = units.delta_big
    w0 = units.omega_zero
    g = units.gamma_small
    dw = d + w0
    scale = 1.0 / (2.0 * units.tau)

    far = 1.0 + 4 * d**2 + 8 * d * w0 + 4 * w0**2
    d1 = np.array(
        [
            [far + 2 * w**2, 0, 1j * w * (1 + 2j * dw), 0],
            [0, 0, 0, -1j * g * w * (1 - 2j * dw)],
            [-1j * w * (1 - 2j * dw), 0, w**2, 0],
            [0, 1j * g * w * (1 + 2j * dw), 0, w**2 + 2 * g * (far + w**2)],
        ],
        dtype=complex,
    )

    near = 1.0 + 4 * d**2
    d2 = np.array(
        [
            [0, 0, 0, -1j * g * (1 - 2j * d) * w],
            [0, near + 2 * w**2, 1j * (1 + 2j * d) * w, 0],
            [0, -1j * (1 - 2j * d) * w, w**2, 0],
            [1j * g * (1 + 2j * d) * w, 0, 0, w**2 + 2 * g * (near + w**2)],
        ],
        dtype=complex,
    )
    return d1 * scale, d2 * scale


def build_fluctuation_system(config: PhysicalConfig, ss: SteadyState) -> FluctuationSystem:
    """Assemble [M1], [S1], [D1], [D2] and [D] for one config and its steady state."""
    units = to_internal(config)
    d1, d2 = diffusion_matrices(units)
    return FluctuationSystem(
        m1=m1_matrix(units),
        s1=s1_matrix(ss),
        d1=d1,
        d2=d2,
        d_total=d1 + d2,
    )


def symmetrized_diffusion(fs: FluctuationSystem) -> np.ndarray:
    """[D] = [D1] + [D2]."""
    return np.asarray(fs.d1) + np.asarray(fs.d2)
