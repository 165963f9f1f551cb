from ._core import (
    ConvergenceError,
    QuadratureConfig,
    RateBreakdown,
    __version__,
    angle_from_delta,
    condensate_fraction,
    critical_density,
    delta_from_angle,
    fugacity,
    near_critical_expansion,
    occupation,
    polarization_factor,
    polylog_g32,
    scaled_photon_momentum,
    sum_rule,
    sweep_tau,
    term2b_monte_carlo,
    term2b_quadrature_3d,
    total_rate,
    zeta_three_halves,
)

__all__ = [
    "ConvergenceError",
    "QuadratureConfig",
    "RateBreakdown",
    "__version__",
    "angle_from_delta",
    "condensate_fraction",
    "critical_density",
    "delta_from_angle",
    "fugacity",
    "near_critical_expansion",
    "occupation",
    "polarization_factor",
    "polylog_g32",
    "scaled_photon_momentum",
    "sum_rule",
    "sweep_tau",
    "term2b_monte_carlo",
    "term2b_quadrature_3d",
    "total_rate",
    "zeta_three_halves",
]
