"""Coefficient family behind the frequency cutoff and its resummation.

The cutoff mirror arises from a series of higher time-derivative couplings
with coefficients

    rho_n(Lambda) = lam * int_0^Lambda du/(2 pi) * 4 beta/(beta^2 + u^2)
                                   * (-1)^n u^(2n) / (2n)!

Summing rho_n omega^(2n) over n resums to a Lorentzian-weighted cosine
integral, and in the Lambda -> infinity limit that integral is exactly
exp(-beta |omega|); this module provides all three objects so the chain
can be checked numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad

# terms of the cosine Taylor series beyond this grow too fast for the
# partial sums to mean anything in double precision
_OMEGA_LAMBDA_GUARD = 50.0


@dataclass(frozen=True)
class SeriesParams:
    """Inputs of the coefficient family: coupling ``lam``, Lorentzian width
    ``beta`` > 0, integration cutoff ``Lambda`` >= 0, series index ``n``
    and partial-sum order ``N``."""

    lam: float
    beta: float
    Lambda: float
    n: int = 1
    N: int = 1

    def __post_init__(self):
        if not (math.isfinite(self.beta) and self.beta > 0.0):
            raise ValueError(f"beta must be finite and > 0, got {self.beta}")
        if not (math.isfinite(self.Lambda) and self.Lambda >= 0.0):
            raise ValueError(f"Lambda must be finite and >= 0, got {self.Lambda}")
        if self.n < 1:
            raise ValueError(f"series index n must be >= 1, got {self.n}")
        if self.N < 1:
            raise ValueError(f"partial-sum order N must be >= 1, got {self.N}")


def _log_rho_magnitude(lam, beta, Lambda, n):
    """log(|rho_n|) and the scaled quadrature it derives from.

    The integrand u^(2n)/(2n)! spans hundreds of orders of magnitude, so
    it is integrated with its peak value factored out:  returns
    (log_scale, scaled_integral) with |rho_n| = |lam| * exp(log_scale) *
    scaled_integral.
    """
    two_n = 2 * n
    log_fact = math.lgamma(two_n + 1)
    # peak of u^(2n)/(beta^2+u^2) on [0, Lambda] sits at u = Lambda
    log_scale = two_n * math.log(Lambda) - log_fact

    def integrand(u):
        if u <= 0.0:
            return 0.0
        expo = two_n * (math.log(u) - math.log(Lambda))
        return (4.0 * beta / (beta * beta + u * u)) * math.exp(expo) / (2.0 * math.pi)

    val, _ = quad(integrand, 0.0, Lambda, epsabs=1e-300, epsrel=1e-12, limit=200)
    return log_scale, val


def rho_n(params: SeriesParams) -> float:
    """Coefficient rho_n(Lambda), accurate to ~1e-10 relative.

    Zero when Lambda = 0; otherwise the sign is (-1)^n * sign(lam).
    """
    if params.Lambda == 0.0 or params.lam == 0.0:
        return 0.0
    log_scale, scaled = _log_rho_magnitude(params.lam, params.beta, params.Lambda, params.n)
    log_mag = log_scale + math.log(scaled)
    if log_mag > 708.0:
        raise OverflowError(
            f"rho_n magnitude exp({log_mag:.1f}) exceeds double range for n={params.n}")
    sign = -1.0 if params.n % 2 else 1.0
    return sign * params.lam * math.exp(log_mag)


def dispersion_sum(params: SeriesParams, omega: float) -> float:
    """Partial sum  sum_{n=1..N} rho_n(Lambda) omega^(2n).

    Requires omega * Lambda <= 50; beyond that the alternating terms grow
    so large that double precision retains nothing of the limit.  The
    difference from the resummed cosine integral is bounded by the first
    omitted Taylor term  (omega Lambda)^(2N+2)/(2N+2)! * |lam|.
    """
    omega = float(omega)
    if not (math.isfinite(omega) and omega >= 0.0):
        raise ValueError(f"dispersion_sum requires omega >= 0, got {omega}")
    if omega * params.Lambda > _OMEGA_LAMBDA_GUARD:
        raise ValueError(
            f"omega*Lambda = {omega * params.Lambda:.3g} exceeds the "
            f"convergence guard {_OMEGA_LAMBDA_GUARD}")
    if omega == 0.0 or params.Lambda == 0.0 or params.lam == 0.0:
        return 0.0

    log_w = math.log(omega)
    total = 0.0
    for n in range(1, params.N + 1):
        log_scale, scaled = _log_rho_magnitude(params.lam, params.beta, params.Lambda, n)
        # combine rho_n with omega^(2n) in log space; the product is small
        # even where the separate factors over/underflow
        term = math.exp(log_scale + math.log(scaled) + 2 * n * log_w)
        total += -term if n % 2 else term
    return params.lam * total


def lorentzian_cosine_integral(beta: float, omega: float, Lambda: float) -> float:
    """int_0^Lambda du/(2 pi) * 4 beta/(beta^2+u^2) * cos(u omega).

    Converges to exp(-beta*omega) as Lambda -> infinity, with tail bounded
    by 2*beta/(pi*Lambda).
    """
    beta = float(beta)
    omega = float(omega)
    Lambda = float(Lambda)
    if not (math.isfinite(beta) and beta > 0.0):
        raise ValueError(f"beta must be > 0, got {beta}")
    if not (math.isfinite(omega) and omega >= 0.0):
        raise ValueError(f"omega must be >= 0, got {omega}")
    if not (math.isfinite(Lambda) and Lambda > 0.0):
        raise ValueError(f"Lambda must be > 0, got {Lambda}")

    def envelope(u):
        return 2.0 * beta / (math.pi * (beta * beta + u * u))

    if omega == 0.0:
        val, _ = quad(envelope, 0.0, Lambda, epsabs=1e-14, epsrel=1e-12, limit=400)
    else:
        # oscillatory weight handled by the dedicated cos-weighted rule
        val, _ = quad(envelope, 0.0, Lambda, weight="cos", wvar=omega,
                      epsabs=1e-14, epsrel=1e-12, limit=max(400, int(Lambda * omega / 3) + 50))
    return val
