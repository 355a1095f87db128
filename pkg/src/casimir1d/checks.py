"""Scattering-matrix axiom checks: reality, unitarity, causality bound,
and high-frequency transparency."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .mirrors import MirrorSpec, _raw_coefficients, cutoff_value


@dataclass(frozen=True)
class Transparency:
    """High-frequency transmission classification.

    ``kind`` is "full" (|s| -> 1), "partial" (|s| -> |limit| < 1) or
    "opaque" (s -> 0, i.e. a perfect mirror at all frequencies); ``limit``
    is the limiting value of s.
    """

    kind: str
    limit: float


@dataclass(frozen=True)
class PropertyReport:
    """Worst-case axiom residuals for one mirror over a frequency sample."""

    max_reality_residual: float
    max_unitarity_residual_diag: float
    max_unitarity_residual_offdiag: float
    imag_axis_max_abs_r: float
    transparency_limit_s: complex
    transparency_classification: Transparency


def classify_transparency(mirror: MirrorSpec) -> Transparency:
    """Analytic high-frequency limit of the transmission coefficient.

    Any decaying cutoff (beta > 0) or lam = 0 gives full transparency;
    without a cutoff, s tends to (1 - lam^2)/(1 + lam^2), which vanishes
    at the perfect-reflection points lam = +-1.
    """
    beta = 0.0 if mirror.cutoff.kind == "none" else mirror.cutoff.beta
    if mirror.lam == 0.0 or beta > 0.0:
        return Transparency("full", 1.0)
    limit = (1.0 - mirror.lam ** 2) / (1.0 + mirror.lam ** 2)
    if limit == 0.0:
        return Transparency("opaque", 0.0)
    return Transparency("partial", limit)


def _coefficient_arrays(mirror: MirrorSpec, omega):
    """Vectorized (r_plus, r_minus, s) at real omega, any sign, via f(|omega|)."""
    omega = np.asarray(omega, dtype=float)
    f = cutoff_value(mirror.cutoff, np.abs(omega))
    return _raw_coefficients(mirror.mu, mirror.lam, f, omega)


def _reflection_imag_arrays(mirror: MirrorSpec, xi):
    """Vectorized (r_plus(i xi), r_minus(i xi)) for xi > 0."""
    xi = np.asarray(xi, dtype=float)
    f = cutoff_value(mirror.cutoff, xi)
    lf = mirror.lam * f
    denom = xi * (1.0 + lf * lf) + mirror.mu
    return (2.0 * xi * lf - mirror.mu) / denom, -(2.0 * xi * lf + mirror.mu) / denom


def verify_axioms(mirror: MirrorSpec, omega_samples) -> PropertyReport:
    """Evaluate all axiom residuals over the given positive frequencies.

    Reality is probed by evaluating the coefficient formulas at -omega
    (cutoff argument |omega|) against the conjugate at +omega; unitarity
    through |s|^2 + |r|^2 = 1 and the off-diagonal orthogonality
    s_+ r_-^* + r_+ s_-^* = 0.  All residuals are exact identities of the
    formulas and should sit at rounding level.
    """
    omega = np.asarray(list(omega_samples), dtype=float)
    if omega.size == 0:
        raise ValueError("verify_axioms requires a non-empty sample list")
    if np.any(omega <= 0.0) or not np.all(np.isfinite(omega)):
        raise ValueError("omega samples must be finite and > 0")

    rp, rm, s = _coefficient_arrays(mirror, omega)
    rp_neg, rm_neg, s_neg = _coefficient_arrays(mirror, -omega)

    reality = max(
        np.max(np.abs(rp_neg - np.conj(rp))),
        np.max(np.abs(rm_neg - np.conj(rm))),
        np.max(np.abs(s_neg - np.conj(s))),
    )
    abs_s2 = np.abs(s) ** 2
    diag = max(
        np.max(np.abs(abs_s2 + np.abs(rp) ** 2 - 1.0)),
        np.max(np.abs(abs_s2 + np.abs(rm) ** 2 - 1.0)),
    )
    offdiag = np.max(np.abs(s * np.conj(rm) + rp * np.conj(s)))

    rip, rim = _reflection_imag_arrays(mirror, omega)
    imag_max = max(np.max(np.abs(rip)), np.max(np.abs(rim)))

    cls = classify_transparency(mirror)
    return PropertyReport(
        max_reality_residual=float(reality),
        max_unitarity_residual_diag=float(diag),
        max_unitarity_residual_offdiag=float(offdiag),
        imag_axis_max_abs_r=float(imag_max),
        transparency_limit_s=complex(cls.limit),
        transparency_classification=cls,
    )


def transparency_profile(mirror: MirrorSpec, omega_max: float, count: int):
    """Tail samples (omega, |r_plus|, |s_plus|) plus the analytic classification.

    Samples are log-spaced over the top three decades below omega_max.
    """
    omega_max = float(omega_max)
    if not (math.isfinite(omega_max) and omega_max > 0.0):
        raise ValueError(f"omega_max must be > 0, got {omega_max}")
    if count < 2:
        raise ValueError(f"count must be >= 2, got {count}")
    omega = np.geomspace(omega_max / 1e3, omega_max, count)
    rp, _, s = _coefficient_arrays(mirror, omega)
    rows = [(float(w), float(abs(r)), float(abs(t))) for w, r, t in zip(omega, rp, s)]
    return rows, classify_transparency(mirror)


def imaginary_axis_bound(mirror: MirrorSpec, xi_samples) -> float:
    """max |r(i xi)| over both sides and all samples; < 1 whenever mu > 0
    and |lam| f(xi) != 1, <= 1 always."""
    xi = np.asarray(list(xi_samples), dtype=float)
    if xi.size == 0:
        raise ValueError("imaginary_axis_bound requires a non-empty sample list")
    if np.any(xi <= 0.0) or not np.all(np.isfinite(xi)):
        raise ValueError("xi samples must be finite and > 0")
    rip, rim = _reflection_imag_arrays(mirror, xi)
    return float(max(np.max(np.abs(rip)), np.max(np.abs(rim))))
