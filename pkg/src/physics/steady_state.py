"""
Zeroth-order (pump-only) system and its steady state.

Unknowns are ordered (σ11, σ22, σ33, σ31, σ13, σ42, σ24) and obey
(i ∂/∂t + [M0]) |Σ0] = |S0]; σ44 follows from the trace.
All matrices are built in units of Γ.
"""

from __future__ import annotations

import logging
import math
from typing import Optional

import numpy as np
import scipy.linalg as la

from src.errors import NonConvergence, SingularSystem
from src.models.physical_config import GammaUnits, PhysicalConfig, to_internal
from src.models.steady_state import SteadyState

logger = logging.getLogger(__name__)

CONDITION_LIMIT: float = 1e12
DRIFT_TOLERANCE: float = 1e-6
DEFAULT_SAMPLES: int = 200
RELAXATION_E_FOLDINGS: float = 40.0


def m0_matrix(gamma_big: float, omega_rabi: float, delta_big: float, omega_zero: float) -> np.ndarray:
    """[M0] for explicit parameter values (any consistent unit)."""
    g2 = 0.5j * gamma_big
    w = 0.5 * omega_rabi
    d = delta_big
    d0 = delta_big + omega_zero
    return np.array(
        [
            [g2, g2, 0, -w, w, 0, 0],
            [g2, g2, 0, 0, 0, -w, w],
            [0, 0, 1j * gamma_big, w, -w, 0, 0],
            [-w, 0, w, -d + g2, 0, 0, 0],
            [w, 0, -w, 0, d + g2, 0, 0],
            [-w, -omega_rabi, -w, 0, 0, -d0 + g2, 0],
            [w, omega_rabi, w, 0, 0, 0, d0 + g2],
        ],
        dtype=complex,
    )


def s0_vector(gamma_big: float, omega_rabi: float) -> np.ndarray:
    """|S0] = ½(iΓ, iΓ, 0, 0, 0, −Ω, Ω); the ∓Ω/2 entries come from σ44 = 1 − σ11 − σ22 − σ33."""
    return 0.5 * np.array(
        [1j * gamma_big, 1j * gamma_big, 0, 0, 0, -omega_rabi, omega_rabi], dtype=complex
    )


def build_m0(config: PhysicalConfig) -> np.ndarray:
    """[M0] of the config, in units of Γ."""
    u = to_internal(config)
    return m0_matrix(1.0, u.omega_rabi, u.delta_big, u.omega_zero)


def build_s0(config: PhysicalConfig) -> np.ndarray:
    """|S0] of the config, in units of Γ."""
    u = to_internal(config)
    return s0_vector(1.0, u.omega_rabi)


def solve_steady_state(config: PhysicalConfig) -> SteadyState:
    """
    Solve [M0]|Σ0] = |S0] for the pumped steady state.

    Raises:
        SingularSystem: Ω = 0, or [M0] too ill-conditioned to trust the solve
    """
    if config.omega_rabi == 0.0:
        raise SingularSystem(
            "Ω = 0: the ground-state populations are not fixed by the pump; "
            "use the pinned ground state instead"
        )
    m0 = build_m0(config)
    s0 = build_s0(config)
    condition = np.linalg.cond(m0)
    logger.debug("M0 condition number %.3e", condition)
    if not math.isfinite(condition) or condition > CONDITION_LIMIT:
        raise SingularSystem(f"[M0] is ill-conditioned (condition {condition:.3e} > {CONDITION_LIMIT:.0e})")

    lu_piv = la.lu_factor(m0)
    vector = la.lu_solve(lu_piv, s0)
    state = SteadyState.from_vector(vector)

    imag_pops = np.abs(np.imag(vector[:3]))
    if np.any(imag_pops > 1e-10) or not state.is_physical(tol=1e-10):
        logger.warning("steady state outside physical bounds: populations %s", state.populations)
    return state


def pinned_steady_state() -> SteadyState:
    """Optical-pumping limit (no pump): everything in |2⟩."""
    return SteadyState.pinned()


def steady_state_for(config: PhysicalConfig, pinned: bool = False) -> SteadyState:
    """Pinned or solved steady state, as selected by the run flag."""
    return pinned_steady_state() if pinned else solve_steady_state(config)


def evolution_generator(units: GammaUnits) -> np.ndarray:
    """
    Affine generator of d/dt [Σ0; 1] in units of Γ.

    From (i∂t + M0)Σ0 = S0: dΣ0/dt = i M0 Σ0 − i S0.
    """
    m0 = m0_matrix(1.0, units.omega_rabi, units.delta_big, units.omega_zero)
    s0 = s0_vector(1.0, units.omega_rabi)
    generator = np.zeros((8, 8), dtype=complex)
    generator[:7, :7] = 1j * m0
    generator[:7, 7] = -1j * s0
    return generator


def relaxation_scales(config: PhysicalConfig) -> tuple[float, float]:
    """
    (slowest, fastest) rates of the zeroth-order dynamics, in rad/s.

    slowest is the smallest nonzero decay rate; 0.0 when a conserved
    mode exists (Ω = 0).
    """
    m0 = build_m0(config)
    eigenvalues = np.linalg.eigvals(1j * m0)
    fastest = float(np.max(np.abs(eigenvalues)))
    decay = np.abs(eigenvalues.real)
    slowest = float(np.min(decay))
    if slowest <= 1e-13 * max(fastest, 1.0):
        slowest = 0.0
    return slowest * config.gamma_big, fastest * config.gamma_big


def evolve_trajectory(
    config: PhysicalConfig,
    t_final: Optional[float] = None,
    dt: Optional[float] = None,
    samples: int = DEFAULT_SAMPLES,
    initial: Optional[SteadyState] = None,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Integrate the zeroth-order equations of motion from `initial` (σ22 = 1 by default).

    The linear ODE is advanced with the exact one-step propagator
    e^{G dt}; the trajectory is recorded at `samples` equally spaced times.

    Args:
        t_final: Duration in seconds (default: 40 slowest relaxation times)
        dt: Step in seconds (default: ten steps per recorded sample)

    Returns:
        (times in seconds, states of shape (samples + 1, 8) ordered as
        SteadyState.full_vector)
    """
    slowest, _ = relaxation_scales(config)
    if t_final is None:
        if slowest == 0.0:
            raise NonConvergence("no finite relaxation time; pass t_final explicitly")
        t_final = RELAXATION_E_FOLDINGS / slowest
    if dt is None:
        # the step propagator is exact, so dt only sets the sampling grid
        dt = t_final / (10 * samples)
    if t_final <= 0 or dt <= 0:
        raise ValueError("t_final and dt must be positive")

    gamma = config.gamma_big
    n_steps = max(int(math.ceil(t_final / dt)), 1)
    samples = max(min(samples, n_steps), 1)
    per_sample = n_steps // samples
    step = la.expm(evolution_generator(to_internal(config)) * (t_final / n_steps) * gamma)
    sample_step = np.linalg.matrix_power(step, per_sample)
    tail = np.linalg.matrix_power(step, n_steps - per_sample * samples)

    state0 = (initial or pinned_steady_state()).as_vector()
    x = np.append(state0, 1.0 + 0j)
    history = [x]
    for k in range(samples):
        x = sample_step @ x
        if k == samples - 1:
            x = tail @ x
        history.append(x)
    raw = np.array(history)

    times = np.arange(samples + 1) * per_sample * (t_final / n_steps)
    times[-1] = t_final
    states = np.column_stack(
        [
            raw[:, 0],
            raw[:, 1],
            raw[:, 2],
            1.0 - raw[:, 0] - raw[:, 1] - raw[:, 2],
            raw[:, 3],
            raw[:, 4],
            raw[:, 5],
            raw[:, 6],
        ]
    )
    return times, states


def evolve_to_steady_state_oracle(
    config: PhysicalConfig,
    t_final: Optional[float] = None,
    dt: Optional[float] = None,
) -> SteadyState:
    """
    Long-time integration of the zeroth-order dynamics, independent of the linear solve.

    Raises:
        NonConvergence: The state still drifts over the last 10% of the interval
    """
    times, states = evolve_trajectory(config, t_final=t_final, dt=dt)
    last = states[-1]
    reference = states[int(round(0.9 * (len(times) - 1)))]
    scale = max(float(np.max(np.abs(last))), 1e-300)
    drift = float(np.max(np.abs(last - reference))) / scale
    if drift > DRIFT_TOLERANCE:
        raise NonConvergence(
            f"state still drifting at t = {times[-1]:.3e} s (relative change {drift:.2e} over the last 10%)"
        )
    logger.debug("oracle settled: relative drift %.2e", drift)
    return SteadyState(
        sigma11=float(last[0].real),
        sigma22=float(last[1].real),
        sigma33=float(last[2].real),
        sigma44=float(last[3].real),
        sigma31=complex(last[4]),
        sigma13=complex(last[5]),
        sigma42=complex(last[6]),
        sigma24=complex(last[7]),
    )
