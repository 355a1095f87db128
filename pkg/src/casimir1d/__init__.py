"""Casimir forces between partially reflecting 1D mirrors.

Mirrors are delta / delta-prime point couplings of a massless scalar
field, optionally with a high-frequency cutoff on the delta-prime part
that makes them fully transparent at high frequencies.  The package
evaluates their scattering coefficients, verifies the scattering-matrix
axioms, and computes the Casimir force by imaginary-axis quadrature,
with parameter sweeps and zero-force contour extraction on top.
"""

from .errors import (
    CasimirError,
    QuadratureError,
    RatioUndefinedError,
    ResonanceError,
    SingularMatchingError,
)
from .mirrors import (
    CutoffProfile,
    MirrorSpec,
    ScatteringSet,
    cutoff_value,
    matching_residuals,
    one_plus_reflection_imaginary,
    reflection_imaginary,
    scattering_coefficients,
)
from .series import SeriesParams, dispersion_sum, lorentzian_cosine_integral, rho_n
from .checks import (
    PropertyReport,
    Transparency,
    classify_transparency,
    imaginary_axis_bound,
    transparency_profile,
    verify_axioms,
)
from .force import (
    CavityConfig,
    ForceResult,
    casimir_force,
    force_ratio,
    integrand_imaginary,
    integrand_real_axis,
    perfect_mirror_reference,
    real_axis_force,
    roundtrip_factor,
    strip_cutoffs,
    truncation_frequency,
)
from .sweeps import (
    AXIS_PARAMETERS,
    AxisSpec,
    GridSweep,
    apply_parameter,
    grid_to_dict,
    sweep_distance,
    sweep_plane,
    write_contours_csv,
    write_grid_csv,
    zero_force_contour,
)

__version__ = "0.1.0"

__all__ = [
    "AXIS_PARAMETERS",
    "AxisSpec",
    "CasimirError",
    "CavityConfig",
    "CutoffProfile",
    "ForceResult",
    "GridSweep",
    "MirrorSpec",
    "PropertyReport",
    "QuadratureError",
    "RatioUndefinedError",
    "ResonanceError",
    "ScatteringSet",
    "SeriesParams",
    "SingularMatchingError",
    "Transparency",
    "apply_parameter",
    "casimir_force",
    "classify_transparency",
    "cutoff_value",
    "dispersion_sum",
    "force_ratio",
    "grid_to_dict",
    "imaginary_axis_bound",
    "integrand_imaginary",
    "integrand_real_axis",
    "lorentzian_cosine_integral",
    "matching_residuals",
    "one_plus_reflection_imaginary",
    "perfect_mirror_reference",
    "real_axis_force",
    "reflection_imaginary",
    "rho_n",
    "roundtrip_factor",
    "scattering_coefficients",
    "strip_cutoffs",
    "sweep_distance",
    "sweep_plane",
    "transparency_profile",
    "truncation_frequency",
    "verify_axioms",
    "write_contours_csv",
    "write_grid_csv",
    "zero_force_contour",
]
