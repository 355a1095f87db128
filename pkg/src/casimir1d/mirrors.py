"""Partially reflecting mirrors built from delta / delta-prime point couplings.

A mirror couples a 1+1D massless scalar field through a delta term of
strength ``mu`` and a delta-prime term of strength ``lambda``.  The
delta-prime coupling may be weakened at high frequency by a cutoff profile
f(omega), which restores full transparency in the high-frequency limit.
All quantities are in natural units (c = hbar = 1).

The scattering coefficients for frequency omega > 0 are

    r_pm(omega) = (+-2 omega lam f - i mu) / (omega (1 + lam^2 f^2) + i mu)
    s(omega)    = omega (1 - lam^2 f^2)   / (omega (1 + lam^2 f^2) + i mu)

with f = f(omega).  On the positive imaginary axis (omega = i xi) the
cutoff argument stays the real modulus xi, which keeps the reflection
coefficients real:

    r_plus(i xi)  =  (2 xi lam f(xi) - mu) / (xi (1 + lam^2 f(xi)^2) + mu)
    r_minus(i xi) = -(2 xi lam f(xi) + mu) / (xi (1 + lam^2 f(xi)^2) + mu)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SingularMatchingError

_CUTOFF_KINDS = ("none", "exp", "gauss")
_SINGULAR_TOL = 1e-12


@dataclass(frozen=True)
class CutoffProfile:
    """High-frequency weakening f(omega) of the delta-prime coupling.

    ``kind`` is one of ``"none"`` (f = 1), ``"exp"`` (f = exp(-beta omega))
    or ``"gauss"`` (f = exp(-beta omega^2)).  For every profile
    0 < f <= 1, f(0) = 1 and f is non-increasing; beta = 0 reproduces
    "none" pointwise.
    """

    kind: str
    beta: float = 0.0

    def __post_init__(self):
        if self.kind not in _CUTOFF_KINDS:
            raise ValueError(f"unknown cutoff kind {self.kind!r}, expected one of {_CUTOFF_KINDS}")
        if not (math.isfinite(self.beta) and self.beta >= 0.0):
            raise ValueError(f"cutoff beta must be finite and >= 0, got {self.beta}")

    @classmethod
    def none(cls) -> "CutoffProfile":
        return cls("none", 0.0)

    @classmethod
    def exponential(cls, beta: float) -> "CutoffProfile":
        return cls("exp", float(beta))

    @classmethod
    def gaussian(cls, beta: float) -> "CutoffProfile":
        return cls("gauss", float(beta))


@dataclass(frozen=True)
class MirrorSpec:
    """One mirror: delta strength ``mu`` >= 0, delta-prime strength ``lam``,
    and the cutoff profile applied to the delta-prime coupling."""

    mu: float
    lam: float
    cutoff: CutoffProfile = CutoffProfile("none", 0.0)

    def __post_init__(self):
        if not (math.isfinite(self.mu) and self.mu >= 0.0):
            raise ValueError(f"mu must be finite and >= 0, got {self.mu}")
        if not math.isfinite(self.lam):
            raise ValueError(f"lambda must be finite, got {self.lam}")


@dataclass(frozen=True)
class ScatteringSet:
    """The four scattering coefficients of one mirror at one real frequency.

    By construction s_plus == s_minus and |s|^2 + |r_pm|^2 = 1.
    """

    omega: float
    r_plus: complex
    r_minus: complex
    s_plus: complex
    s_minus: complex


def cutoff_value(profile: CutoffProfile, omega):
    """Evaluate f(omega) for omega >= 0; scalar in, scalar out (arrays pass through).

    f is in (0, 1] with f(0) = 1.  Raises ValueError on negative or
    non-finite frequencies.
    """
    arr = np.asarray(omega, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0.0):
        raise ValueError("cutoff_value requires finite omega >= 0")
    if profile.kind == "none":
        out = np.ones_like(arr)
    elif profile.kind == "exp":
        out = np.exp(-profile.beta * arr)
    else:
        out = np.exp(-profile.beta * arr * arr)
    if arr.ndim == 0:
        return float(out)
    return out


def _raw_coefficients(mu, lam, f, omega):
    """Coefficient formulas at real omega (any sign), cutoff values supplied.

    No validation; used by the public scalar wrapper and by the axiom
    checks, which probe negative frequencies through f(|omega|).
    """
    lf = lam * f
    denom = omega * (1.0 + lf * lf) + 1j * mu
    two_wlf = 2.0 * omega * lf
    r_plus = (two_wlf - 1j * mu) / denom
    r_minus = (-two_wlf - 1j * mu) / denom
    s = omega * (1.0 - lf * lf) / denom
    return r_plus, r_minus, s


def scattering_coefficients(mirror: MirrorSpec, omega: float) -> ScatteringSet:
    """Scattering coefficients of ``mirror`` at real frequency omega > 0.

    Negative frequencies are not evaluated directly; callers extend via the
    reality relation r(-omega) = conj(r(omega)).
    """
    omega = float(omega)
    if not (math.isfinite(omega) and omega > 0.0):
        raise ValueError(f"scattering_coefficients requires omega > 0, got {omega}")
    f = cutoff_value(mirror.cutoff, omega)
    r_plus, r_minus, s = _raw_coefficients(mirror.mu, mirror.lam, f, omega)
    return ScatteringSet(omega=omega, r_plus=complex(r_plus), r_minus=complex(r_minus),
                         s_plus=complex(s), s_minus=complex(s))


def reflection_imaginary(mirror: MirrorSpec, xi: float, side: str) -> float:
    """Reflection coefficient at omega = i*xi (xi > 0) on the given side.

    The rational part is continued as omega -> i*xi while the cutoff is
    evaluated at the real modulus xi, so the result is exactly real and
    bounded by 1 in magnitude.
    """
    xi = float(xi)
    if not (math.isfinite(xi) and xi > 0.0):
        raise ValueError(f"reflection_imaginary requires xi > 0, got {xi}")
    if side not in ("plus", "minus"):
        raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")
    f = cutoff_value(mirror.cutoff, xi)
    lf = mirror.lam * f
    denom = xi * (1.0 + lf * lf) + mirror.mu
    if side == "plus":
        return (2.0 * xi * lf - mirror.mu) / denom
    return -(2.0 * xi * lf + mirror.mu) / denom


def one_plus_reflection_imaginary(mirror: MirrorSpec, xi: float, side: str) -> float:
    """1 + r(i*xi) in cancellation-free form, xi(1 +- lam f)^2 / denom.

    Equals 1 + reflection_imaginary(...) exactly in real arithmetic but
    stays accurate for xi -> 0 where r -> -1; the force integrand relies
    on this near its lower endpoint.
    """
    xi = float(xi)
    if not (math.isfinite(xi) and xi > 0.0):
        raise ValueError(f"one_plus_reflection_imaginary requires xi > 0, got {xi}")
    if side not in ("plus", "minus"):
        raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")
    f = cutoff_value(mirror.cutoff, xi)
    lf = mirror.lam * f
    denom = xi * (1.0 + lf * lf) + mirror.mu
    sign = 1.0 if side == "plus" else -1.0
    return xi * (1.0 + sign * lf) ** 2 / denom


def matching_residuals(mirror: MirrorSpec, omega: float, incidence: str) -> tuple:
    """Residuals of the two field matching conditions at the mirror.

    Builds the plane-wave solution of the given incidence ("right" or
    "left") from the scattering coefficients, takes the one-sided limits
    of the field and its spatial derivative at the mirror position, and
    returns the absolute residuals of

        phi(0+)  = (1 + lam f)/(1 - lam f) phi(0-)
        phi'(0+) = (1 - lam f)/(1 + lam f) phi'(0-)
                   + 2 mu / (1 - lam^2 f^2) phi(0-)

    Both vanish to rounding for coefficients produced by this module.
    Raises SingularMatchingError where |1 -+ lam f| < 1e-12 (perfect
    reflection; the matching coefficients diverge).
    """
    if incidence not in ("right", "left"):
        raise ValueError(f"incidence must be 'right' or 'left', got {incidence!r}")
    coeffs = scattering_coefficients(mirror, omega)
    f = cutoff_value(mirror.cutoff, coeffs.omega)
    lf = mirror.lam * f
    if abs(1.0 - lf) < _SINGULAR_TOL or abs(1.0 + lf) < _SINGULAR_TOL:
        raise SingularMatchingError(
            f"matching conditions singular at lambda*f = {lf} (omega = {coeffs.omega})")

    norm = 1.0 / math.sqrt(4.0 * math.pi * coeffs.omega)
    iw = 1j * coeffs.omega
    if incidence == "right":
        # incoming wave from x > 0: reflected r_plus on the right,
        # transmitted s_minus on the left
        phi_right = (coeffs.r_plus + 1.0) * norm
        phi_left = coeffs.s_minus * norm
        dphi_right = iw * (coeffs.r_plus - 1.0) * norm
        dphi_left = -iw * coeffs.s_minus * norm
    else:
        phi_right = coeffs.s_plus * norm
        phi_left = (coeffs.r_minus + 1.0) * norm
        dphi_right = iw * coeffs.s_plus * norm
        dphi_left = iw * (1.0 - coeffs.r_minus) * norm

    c_field = (1.0 + lf) / (1.0 - lf)
    c_deriv = (1.0 - lf) / (1.0 + lf)
    c_source = 2.0 * mirror.mu / ((1.0 - lf) * (1.0 + lf))
    res_field = abs(phi_right - c_field * phi_left)
    res_deriv = abs(dphi_right - c_deriv * dphi_left - c_source * phi_left)
    return res_field, res_deriv
