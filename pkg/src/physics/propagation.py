"""
Propagation of the seed and conjugate fields through the medium.

At analysis frequency ω the pair (â(ω), b̂†(ω)) obeys
∂z (â, b̂†) = [M(ω)] (â, b̂†) + Langevin forces, z ∈ [0, 1]. The output is
e^{[M(ω)]} times the input plus the integrated forces, whose covariance at
the output face enters the spectra.
"""

from __future__ import annotations

import logging
import math
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss

from src.errors import QuadratureNotConverged, ResonantSingularity
from src.models.fluctuation_system import FluctuationSystem
from src.models.physical_config import PhysicalConfig, to_internal
from src.models.transfer_solution import LangevinDiffusion, TransferSolution

logger = logging.getLogger(__name__)

CONDITION_LIMIT: float = 1e12
OMEGA_NUDGE: float = 1e-6  # in units of Γ
QUAD_RTOL: float = 1e-8
QUAD_ATOL: float = 1e-14
MAX_QUAD_ORDER: int = 4096
FORCE_PREFACTOR: float = 2.0

# Picks (σ23, σ41) out of the coherences: â couples with −σ23, b̂† with σ41.
FIELD_PROJECTION = np.array([[-1, 0, 0, 0], [0, 1, 0, 0]], dtype=complex)


def _resolvent(fs: FluctuationSystem, omega_u: float) -> np.ndarray:
    """([M1] + ω)⁻¹ with ω in units of Γ."""
    shifted = np.asarray(fs.m1) + omega_u * np.eye(4)
    condition = float(np.linalg.cond(shifted))
    if not math.isfinite(condition) or condition > CONDITION_LIMIT:
        raise ResonantSingularity(omega_u, condition)
    return np.linalg.inv(shifted)


def _chain(kappa: float, fs: FluctuationSystem, omega_u: float) -> tuple[np.ndarray, np.ndarray]:
    """([M], [M_F]) at ω in units of Γ, sharing one resolvent."""
    projected = FIELD_PROJECTION @ _resolvent(fs, omega_u)
    return -1j * kappa * projected @ np.asarray(fs.s1), -math.sqrt(kappa) * projected


def propagation_generator(config: PhysicalConfig, fs: FluctuationSystem, omega: float) -> np.ndarray:
    """
    [M(ω)] = −iκ [T]([M1] + ω)⁻¹[S1] over the unit-length medium.

    Args:
        omega: Analysis frequency (rad/s)

    Raises:
        ResonantSingularity: ω sits on a pole of the coherence response
    """
    return _chain(to_internal(config).kappa, fs, omega / config.gamma_big)[0]


def force_generator(config: PhysicalConfig, fs: FluctuationSystem, omega: float) -> np.ndarray:
    """[M_F(ω)] = −√κ [T]([M1] + ω)⁻¹, mapping coherence forces onto the fields."""
    return _chain(to_internal(config).kappa, fs, omega / config.gamma_big)[1]


def transfer_matrix(generator: np.ndarray) -> np.ndarray:
    """
    Matrix exponential of a 2×2 generator, or of a stack of them (shape (..., 2, 2)).

    With eigenvalues λ± = t ± s (t = tr M / 2, s² = α² + bc, α = (a − d)/2):
    e^M = [e^{λ+}(M − λ− I) − e^{λ−}(M − λ+ I)] / 2s. The diagonal factors
    α ± s are formed without cancellation, so a strongly absorbed channel
    keeps its full relative precision. Near-degenerate eigenvalues switch
    to the series of sinh(s)/s.
    """
    m = np.asarray(generator, dtype=complex)
    a = m[..., 0, 0]
    b = m[..., 0, 1]
    c = m[..., 1, 0]
    d = m[..., 1, 1]
    half_trace = 0.5 * (a + d)
    alpha = 0.5 * (a - d)
    s = np.sqrt(alpha**2 + b * c)
    norm = np.max(np.abs(m), axis=(-2, -1))

    # (α + s)(α − s) = −bc: take the larger root directly, the smaller from the product
    swap = np.abs(alpha + s) < np.abs(alpha - s)
    large = np.where(swap, alpha - s, alpha + s)
    safe_large = np.where(large == 0, 1.0, large)
    small = np.where(large == 0, 0.0, -b * c / safe_large)
    alpha_plus = np.where(swap, small, large)
    alpha_minus = np.where(swap, large, small)

    degenerate = np.abs(2.0 * s) < 1e-8 * np.maximum(norm, 1e-300)
    safe_s = np.where(degenerate, 1.0, s)
    with np.errstate(over="ignore", invalid="ignore"):
        grow = np.exp(half_trace + s)
        decay = np.exp(half_trace - s)
        inv = 0.5 / safe_s
        diag_a = (grow * alpha_plus - decay * alpha_minus) * inv
        diag_d = (decay * alpha_plus - grow * alpha_minus) * inv
        offdiag = (grow - decay) * inv

    centre = np.exp(half_trace)
    series_cosh = centre * (1.0 + s * s / 2.0)
    series_sinhc = centre * (1.0 + s * s / 6.0)

    out = np.empty(m.shape, dtype=complex)
    out[..., 0, 0] = np.where(degenerate, series_cosh + series_sinhc * alpha, diag_a)
    out[..., 0, 1] = np.where(degenerate, series_sinhc, offdiag) * b
    out[..., 1, 0] = np.where(degenerate, series_sinhc, offdiag) * c
    out[..., 1, 1] = np.where(degenerate, series_cosh - series_sinhc * alpha, diag_d)
    return out


@lru_cache(maxsize=None)
def gauss_legendre_unit(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss–Legendre nodes and weights mapped to [0, 1]."""
    nodes, weights = leggauss(order)
    return 0.5 * (nodes + 1.0), 0.5 * weights


def _output_covariance(generator: np.ndarray, force: np.ndarray, diffusion: np.ndarray, order: int) -> np.ndarray:
    """
    FORCE_PREFACTOR · ∫₀¹ e^{Mv} F D F† e^{M†v} dv.

    v = 1 − z: a force injected at depth z reaches the output through e^{M(1−z)}.
    """
    nodes, weights = gauss_legendre_unit(order)
    kernel = transfer_matrix(generator[None, :, :] * nodes[:, None, None])
    source = force @ diffusion @ force.conj().T
    integrand = kernel @ source @ np.conj(np.swapaxes(kernel, -1, -2))
    return FORCE_PREFACTOR * np.tensordot(weights, integrand, axes=(0, 0))


def _converged_covariance(
    generator: np.ndarray,
    force: np.ndarray,
    diffusion: np.ndarray,
    quad_order: int,
) -> np.ndarray:
    """The output covariance, doubling the order until it stops moving."""
    order = quad_order
    previous = _output_covariance(generator, force, diffusion, order)
    while order < MAX_QUAD_ORDER:
        order *= 2
        current = _output_covariance(generator, force, diffusion, order)
        if np.max(np.abs(current - previous)) <= QUAD_RTOL * np.max(np.abs(current)) + QUAD_ATOL:
            if order > 2 * quad_order:
                logger.debug("quadrature refined to order %d", order)
            return current
        previous = current
    raise QuadratureNotConverged(
        f"diffusion integrals still changing at quadrature order {MAX_QUAD_ORDER}"
    )


def _input_diagonal(generator: np.ndarray, covariance: np.ndarray) -> np.ndarray:
    """Diagonal of e^{−M} · cov · e^{−M†}, the covariance referred back to the input."""
    inverse = transfer_matrix(-generator)
    with np.errstate(over="ignore", invalid="ignore"):
        diagonal = np.einsum("ij,jk,ik->i", inverse, covariance, inverse.conj()).real
    # rounding on a nearly singular covariance
    return np.maximum(diagonal, 0.0)


def _check_hermitian(covariance: np.ndarray) -> None:
    skew = float(np.max(np.abs(covariance - covariance.conj().T)))
    if skew > 1e-10 * max(float(np.max(np.abs(covariance))), 1.0):
        logger.warning("force covariance departs from Hermitian by %.2e", skew)


def _diffusion(
    direct: tuple[np.ndarray, np.ndarray],
    adjoint: tuple[np.ndarray, np.ndarray],
    d_total: np.ndarray,
    quad_order: int,
) -> LangevinDiffusion:
    direct_cov = _converged_covariance(*direct, d_total, quad_order)
    # (â†(ω), b̂(ω)) propagate with M*(−ω) and see the conjugate force correlation
    adjoint_cov = _converged_covariance(*adjoint, np.conj(d_total), quad_order)
    _check_hermitian(direct_cov)
    _check_hermitian(adjoint_cov)
    direct_diag = _input_diagonal(direct[0], direct_cov)
    adjoint_diag = _input_diagonal(adjoint[0], adjoint_cov)
    return LangevinDiffusion(
        direct=direct_cov,
        adjoint=adjoint_cov,
        aa_dag=float(direct_diag[0]),
        dag_aa=float(adjoint_diag[0]),
        bdag_b=float(direct_diag[1]),
        b_bdag=float(adjoint_diag[1]),
    )


def _chains(
    kappa: float, fs: FluctuationSystem, omega_u: float
) -> tuple[tuple[np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray]]:
    """(M, M_F) of the direct chain at ω and of the adjoint chain, conj(M(−ω), M_F(−ω))."""
    direct = _chain(kappa, fs, omega_u)
    generator, force = _chain(kappa, fs, -omega_u)
    return direct, (np.conj(generator), np.conj(force))


def langevin_diffusion(
    config: PhysicalConfig,
    fs: FluctuationSystem,
    omega: float,
    quad_order: int = 64,
) -> LangevinDiffusion:
    """
    Atom-driven output noise and the four Langevin diffusion scalars at ω (rad/s).

    Raises:
        QuadratureNotConverged: Refinement up to the maximum order did not settle
        ResonantSingularity: ω or −ω sits on a pole
    """
    direct, adjoint = _chains(to_internal(config).kappa, fs, omega / config.gamma_big)
    return _diffusion(direct, adjoint, np.asarray(fs.d_total), quad_order)


def _solve_u(
    kappa: float,
    fs: FluctuationSystem,
    omega_u: float,
    quad_order: int,
    langevin_enabled: bool,
) -> tuple[np.ndarray, np.ndarray, LangevinDiffusion]:
    direct, adjoint = _chains(kappa, fs, omega_u)
    abcd = transfer_matrix(direct[0])
    abcd_conj = transfer_matrix(adjoint[0])
    if not langevin_enabled:
        return abcd, abcd_conj, LangevinDiffusion()
    return abcd, abcd_conj, _diffusion(direct, adjoint, np.asarray(fs.d_total), quad_order)


def solve_transfer(
    config: PhysicalConfig,
    fs: FluctuationSystem,
    omega: float,
    quad_order: int = 64,
    langevin_enabled: bool = True,
) -> TransferSolution:
    """
    Transfer coefficients and atom-driven output noise at ω (rad/s).

    A resonant ω is retried once, shifted by OMEGA_NUDGE·Γ.
    """
    kappa = to_internal(config).kappa
    omega_u = omega / config.gamma_big
    try:
        abcd, abcd_conj, diffusion = _solve_u(kappa, fs, omega_u, quad_order, langevin_enabled)
    except ResonantSingularity as exc:
        logger.info("ω = %.6g Γ is resonant (condition %.2e); nudging by %g Γ", omega_u, exc.condition, OMEGA_NUDGE)
        omega_u += OMEGA_NUDGE
        abcd, abcd_conj, diffusion = _solve_u(kappa, fs, omega_u, quad_order, langevin_enabled)
    return TransferSolution(omega=omega, abcd=abcd, abcd_conj=abcd_conj, diffusion=diffusion)


def exchange_roles(ts: TransferSolution) -> TransferSolution:
    """
    Swap seed and conjugate: A' = D*(−ω), B' = C*(−ω), C' = B*(−ω), D' = A*(−ω).

    Used when the seed is tuned across the second Λ system.
    """
    return TransferSolution(
        omega=ts.omega,
        abcd=ts.abcd_conj[::-1, ::-1],
        abcd_conj=ts.abcd[::-1, ::-1],
        diffusion=ts.diffusion.exchanged(),
    )
