"""Casimir force between two mirrors from the imaginary-axis representation.

The force on the right mirror (negative = attraction) is

    F = int_0^inf  -(xi/pi) R(xi) / (e^(2 xi q) - R(xi))  dxi,

with R(xi) = r_plus^(1)(i xi) * r_minus^(2)(i xi) the round-trip
reflection product of the cavity.  The integrand is smooth and dies like
xi e^(-2 xi q), so an adaptive rule over [0, xi_q] with an analytic tail
bound gives tight error control.  A real-axis form of the integrand is
provided for cross-validation on the analytic (cutoff-free delta) sector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from scipy.integrate import quad

from .errors import QuadratureError, RatioUndefinedError, ResonanceError
from .mirrors import (
    CutoffProfile,
    MirrorSpec,
    cutoff_value,
    one_plus_reflection_imaginary,
    scattering_coefficients,
)

# lower endpoint: the integrand extends continuously to xi = 0 but its
# closed form is 0/0 there; starting at EPS costs < 1e-12 in absolute value
_XI_EPS = 1e-12
_QUAD_LIMIT = 200
_QUAD_EPSABS = 1e-13


@dataclass(frozen=True)
class CavityConfig:
    """Two mirrors, mirror1 at x = 0 and mirror2 at x = q > 0."""

    mirror1: MirrorSpec
    mirror2: MirrorSpec
    q: float

    def __post_init__(self):
        if not (math.isfinite(self.q) and self.q > 0.0):
            raise ValueError(f"separation q must be finite and > 0, got {self.q}")


@dataclass(frozen=True)
class ForceResult:
    """Force value with its absolute error estimate, the truncation
    frequency used, and the number of integrand evaluations."""

    force: float
    abs_error_estimate: float
    truncation_xi: float
    evaluations: int


def _roundtrip_parts(cavity: CavityConfig, xi: float):
    """(R, 1 - R) at omega = i*xi without cancellation near R -> 1."""
    d1 = one_plus_reflection_imaginary(cavity.mirror1, xi, "plus")
    d2 = one_plus_reflection_imaginary(cavity.mirror2, xi, "minus")
    return (d1 - 1.0) * (d2 - 1.0), d1 + d2 - d1 * d2


def integrand_imaginary(cavity: CavityConfig, xi: float) -> float:
    """Force spectral density -(xi/pi) R/(e^(2 xi q) - R) at xi > 0.

    The denominator is evaluated as expm1(2 xi q) + (1 - R) so it stays
    positive and fully accurate down to xi ~ 1e-12 where R -> 1.
    """
    xi = float(xi)
    if not (math.isfinite(xi) and xi > 0.0):
        raise ValueError(f"integrand_imaginary requires xi > 0, got {xi}")
    R, one_minus_R = _roundtrip_parts(cavity, xi)
    ex = 2.0 * xi * cavity.q
    if ex > 700.0:
        # e^(2 xi q) overflows; |R| <= 1 so the density is just R e^(-2 xi q)
        return -(xi / math.pi) * R * math.exp(-ex)
    return -(xi / math.pi) * R / (math.expm1(ex) + one_minus_R)


def roundtrip_factor(mirror: MirrorSpec, xi: float, side: str) -> float:
    """Denominator-over-numerator factor B of the spectral density's
    alternative form, computed from its own expression:

        B = (xi (1 + lam^2 f^2) + mu) / (mu -+ 2 xi lam f),

    '-' for side "plus", '+' for side "minus".  It equals -1/r(i xi), so
    the product over a cavity obeys R * B1 * B2 = 1; the regression test
    ties both routes together.
    """
    xi = float(xi)
    if not (math.isfinite(xi) and xi > 0.0):
        raise ValueError(f"roundtrip_factor requires xi > 0, got {xi}")
    if side not in ("plus", "minus"):
        raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")
    f = cutoff_value(mirror.cutoff, xi)
    lf = mirror.lam * f
    sign = -1.0 if side == "plus" else 1.0
    return (xi * (1.0 + lf * lf) + mirror.mu) / (mirror.mu + sign * 2.0 * xi * lf)


def _tail_bound(q: float, xi_t: float) -> float:
    """Bound on |int_{xi_t}^inf| of the spectral density: with |R| <= 1,
    the tail is below (1 + x) e^-x / (4 pi q^2 (1 - e^-x)), x = 2 q xi_t."""
    x = 2.0 * q * xi_t
    return (1.0 + x) * math.exp(-x) / (4.0 * math.pi * q * q * (-math.expm1(-x)))


def _coarse_scale(cavity: CavityConfig, counter) -> float:
    """Cheap magnitude estimate of |F| used to anchor relative tolerances."""
    q = cavity.q

    def f(xi):
        counter[0] += 1
        return integrand_imaginary(cavity, xi)

    pts = [_XI_EPS, 0.25 / q, 0.5 / q, 1.0 / q, 2.0 / q, 4.0 / q, 8.0 / q]
    total = 0.0
    for a, b in zip(pts[:-1], pts[1:]):
        val, _ = quad(f, a, b, epsabs=1e-9, epsrel=1e-6, limit=10)
        total += val
    return abs(total)


def _solve_truncation(q: float, target: float) -> float:
    """Smallest xi with the closed-form tail bound below ``target``."""

    def excess(x):
        # log of (1+x)e^-x/(1-e^-x) vs 4 pi q^2 target; stable for large x
        return (math.log1p(x) - x - math.log(-math.expm1(-x))
                - math.log(4.0 * math.pi * q * q * target))

    lo, hi = 1e-6, 1.0
    while excess(hi) > 0.0 and hi < 1500.0:
        hi *= 2.0
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if excess(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return hi / (2.0 * q)


def truncation_frequency(cavity: CavityConfig, tol: float) -> float:
    """Upper quadrature limit xi_q with analytic tail below tol * |F estimate|.

    Strictly decreasing in q for a fixed mirror pair and increasing as tol
    tightens.
    """
    if not (0.0 < tol < 1.0):
        raise ValueError(f"tol must be in (0, 1), got {tol}")
    scale = max(_coarse_scale(cavity, [0]), 1e-300)
    return _solve_truncation(cavity.q, tol * scale)


def casimir_force(cavity: CavityConfig, rel_tol: float = 1e-8) -> ForceResult:
    """Casimir force on the right mirror; negative values are attractive.

    Adaptive quadrature of the imaginary-axis spectral density over
    [~0, xi_q], with panels seeded at the 1/(2q)-scale peak and the
    analytic tail bound folded into the error estimate.
    """
    if not (0.0 < rel_tol < 1.0):
        raise ValueError(f"rel_tol must be in (0, 1), got {rel_tol}")
    q = cavity.q
    counter = [0]
    scale = max(_coarse_scale(cavity, counter), 1e-300)
    xi_q = _solve_truncation(q, (rel_tol / 4.0) * scale)

    def f(xi):
        counter[0] += 1
        return integrand_imaginary(cavity, xi)

    seeds = sorted({p for p in (0.5 / q, 1.0 / q, 2.0 / q) if _XI_EPS < p < xi_q})
    out = quad(f, _XI_EPS, xi_q, points=seeds or None, epsabs=_QUAD_EPSABS,
               epsrel=rel_tol, limit=_QUAD_LIMIT, full_output=True)
    value, abserr = out[0], out[1]
    tail = _tail_bound(q, xi_q)
    skipped = _XI_EPS * abs(f(_XI_EPS))
    result = ForceResult(
        force=float(value),
        abs_error_estimate=float(abserr + tail + skipped),
        truncation_xi=float(xi_q),
        evaluations=counter[0],
    )
    if len(out) > 3:
        raise QuadratureError(f"force quadrature did not converge: {out[3]}", partial=result)
    return result


def integrand_real_axis(cavity: CavityConfig, omega: float) -> float:
    """Real-axis force integrand (1/pi) Re[omega rho / (e^(-2 i omega q) - rho)]
    with rho = r_plus^(1)(omega) r_minus^(2)(omega).

    Meaningful as a cross-check of the imaginary-axis route only where the
    coefficients are analytic in the upper half-plane, i.e. for cutoff-free
    delta mirrors; a frequency-cutoff mirror has no analytic continuation
    and the two axes genuinely disagree.
    """
    omega = float(omega)
    if not (math.isfinite(omega) and omega > 0.0):
        raise ValueError(f"integrand_real_axis requires omega > 0, got {omega}")
    rho = (scattering_coefficients(cavity.mirror1, omega).r_plus
           * scattering_coefficients(cavity.mirror2, omega).r_minus)
    denom = complex(math.cos(2.0 * omega * cavity.q), -math.sin(2.0 * omega * cavity.q)) - rho
    if abs(denom) <= 1e-14:
        raise ResonanceError(f"real-axis integrand at resonance, omega = {omega}")
    return (omega * (rho / denom)).real / math.pi


def real_axis_force(cavity: CavityConfig, omega_max: float) -> float:
    """Truncated real-axis force integral int_0^Omega, summed over
    half-oscillation chunks of width pi/(2q) for a stable oscillatory tail."""
    omega_max = float(omega_max)
    if not (math.isfinite(omega_max) and omega_max > 0.0):
        raise ValueError(f"omega_max must be > 0, got {omega_max}")

    def g(w):
        return integrand_real_axis(cavity, w)

    step = math.pi / (2.0 * cavity.q)
    edges = [0.0]
    x = step
    while x < omega_max:
        edges.append(x)
        x += step
    edges.append(omega_max)
    pieces = []
    for a, b in zip(edges[:-1], edges[1:]):
        lo = max(a, 1e-12)
        val, _ = quad(g, lo, b, epsabs=1e-12, epsrel=1e-10, limit=100)
        pieces.append(val)
    return math.fsum(pieces)


def perfect_mirror_reference(q: float) -> float:
    """Force between two perfectly reflecting mirrors, -pi/(24 q^2)."""
    q = float(q)
    if not (math.isfinite(q) and q > 0.0):
        raise ValueError(f"q must be > 0, got {q}")
    return -math.pi / (24.0 * q * q)


def strip_cutoffs(cavity: CavityConfig) -> CavityConfig:
    """Companion cavity with both cutoff profiles removed (same mu, lam, q)."""
    none = CutoffProfile.none()
    return CavityConfig(
        mirror1=replace(cavity.mirror1, cutoff=none),
        mirror2=replace(cavity.mirror2, cutoff=none),
        q=cavity.q,
    )


def force_ratio(cavity: CavityConfig, rel_tol: float = 1e-8) -> float:
    """Force of ``cavity`` divided by the force of its cutoff-free companion.

    Exactly 1 when no mirror has a cutoff.  Raises RatioUndefinedError when
    the companion force is zero within its own error estimate.
    """
    numerator = casimir_force(cavity, rel_tol)
    denominator = casimir_force(strip_cutoffs(cavity), rel_tol)
    if abs(denominator.force) <= 10.0 * denominator.abs_error_estimate:
        raise RatioUndefinedError(
            f"cutoff-free companion force {denominator.force:.3e} is zero "
            f"within its error estimate {denominator.abs_error_estimate:.3e}")
    return numerator.force / denominator.force
