"""Measurable quantities built from transfer solutions: gains, noise spectra, inseparability."""

from __future__ import annotations

import math

import numpy as np

from src.errors import NonPositive, UndefinedSpectrum
from src.models.transfer_solution import TransferSolution


def gains(ts0: TransferSolution) -> tuple[float, float]:
    """(G_a, G_b) = (|A(0)|², |C(0)|²) from the ω = 0 solution."""
    return abs(ts0.a) ** 2, abs(ts0.c) ** 2


def _project(weights: np.ndarray, covariance: np.ndarray) -> float:
    """w · cov · w†."""
    return float(np.real(weights @ covariance @ np.conj(weights)))


def single_beam_spectra(ts: TransferSolution) -> tuple[float, float]:
    """
    SQL-normalised quadrature noise of each output beam, (s_xa, s_xb).

    The inputs are coherent and the process phase-insensitive, so the
    phase quadratures carry the same noise: s_pa = s_xa, s_pb = s_xb.
    """
    plus = ts.abcd
    minus = ts.mirrored()
    direct = ts.diffusion.direct
    adjoint = ts.diffusion.adjoint
    row_a = np.abs(np.array([plus[0, 0], minus[0, 0], plus[0, 1], minus[0, 1]])) ** 2
    row_b = np.abs(np.array([plus[1, 0], minus[1, 0], plus[1, 1], minus[1, 1]])) ** 2
    s_xa = 0.5 * (float(row_a.sum()) + direct[0, 0].real + adjoint[0, 0].real)
    s_xb = 0.5 * (float(row_b.sum()) + direct[1, 1].real + adjoint[1, 1].real)
    return float(s_xa), float(s_xb)


def correlation_spectra(ts: TransferSolution, ts0: TransferSolution) -> tuple[float, float]:
    """
    Intensity-difference and phase-sum spectra (S_x⁻, S_p⁺), SQL-normalised.

    The input vacuum enters through the transfer coefficients term by term.
    The atom noise is projected from the output covariances of the two
    chains with the same weights, so correlations between the forces on
    â and b̂† are kept.

    Raises:
        UndefinedSpectrum: G_a + G_b = 0
    """
    g_a, g_b = gains(ts0)
    total = g_a + g_b
    if total <= 0.0:
        raise UndefinedSpectrum("total output gain G_a + G_b vanishes")

    a0, c0 = ts0.a, ts0.c
    a, b, c, d = ts.a, ts.b, ts.c, ts.d
    am, bm, cm, dm = ts.mirrored().ravel()
    conj = np.conj
    direct = ts.diffusion.direct
    adjoint = ts.diffusion.adjoint

    x_terms = np.abs(
        np.array(
            [
                conj(a0) * a - conj(c0) * c,
                a0 * conj(am) - c0 * conj(cm),
                conj(a0) * b - conj(c0) * d,
                a0 * conj(bm) - c0 * conj(dm),
            ]
        )
    ) ** 2
    p_terms = np.abs(
        np.array(
            [
                a0 * c - conj(c0) * conj(a),
                a0 * conj(cm) - conj(c0) * conj(am),
                a0 * d - conj(c0) * conj(b),
                a0 * conj(dm) - conj(c0) * conj(bm),
            ]
        )
    ) ** 2
    x_noise = _project(np.array([conj(a0), -conj(c0)]), direct) + _project(np.array([a0, -c0]), adjoint)
    # the direct-chain p weights pair b̂†(ω) with â(ω)†, which share no force correlation at ω ≠ 0
    p_noise = (
        abs(a0) ** 2 * direct[1, 1].real
        + abs(c0) ** 2 * direct[0, 0].real
        + _project(np.array([-conj(c0), a0]), adjoint)
    )
    norm = 2.0 * total
    return (float(x_terms.sum()) + x_noise) / norm, (float(p_terms.sum()) + float(p_noise)) / norm


def inseparability(s_x_minus: float, s_p_plus: float) -> float:
    """𝓘 = ½(S_x⁻ + S_p⁺); below 1 the two beams are entangled."""
    return 0.5 * (s_x_minus + s_p_plus)


def to_decibels(value: float) -> float:
    """10·log10(value)."""
    if not value > 0.0:
        raise NonPositive(f"cannot express {value!r} in dB")
    return 10.0 * math.log10(value)
