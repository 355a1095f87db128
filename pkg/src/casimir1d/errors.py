"""Exception types shared across the package."""


class CasimirError(Exception):
    """Base class for all casimir1d errors."""


class SingularMatchingError(CasimirError):
    """Matching coefficients diverge (perfect-reflection point lambda*f = +-1)."""


class QuadratureError(CasimirError):
    """Adaptive quadrature exhausted its panel budget.

    Carries the best available partial result in ``partial`` (a ForceResult),
    so callers may still inspect the failed estimate.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class RatioUndefinedError(CasimirError):
    """Force ratio requested where the cutoff-free companion force vanishes."""


class ResonanceError(CasimirError):
    """Real-axis integrand evaluated too close to a cavity resonance."""
