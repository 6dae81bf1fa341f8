"""Fractional Sobolev-type inequality toolkit on the periodic cube.

Fields are real NumPy arrays of shape (N,) or (N, N) sampled on [-L/2, L/2)^n,
with N a power of two; every function takes the side length L as `period`.
"""

from ._core import (
    GateError,
    InvalidArgument,
    besov_norm_lp,
    besov_norm_thermic,
    fractional_laplacian,
    heat_convolve,
    hedberg_theta,
    hl_maximal,
    lp_norm,
    luxemburg_norm,
    orlicz_norm,
    phi_maximal,
    riemann_liouville_fraclap,
    riesz_potential,
    run_acceptance,
    run_config,
    sample_gaussian,
    sample_random_band_limited,
    sigma_exponent,
    sobolev_conjugate,
    weak_lorentz_norm,
)

__all__ = [
    "GateError",
    "InvalidArgument",
    "besov_norm_lp",
    "besov_norm_thermic",
    "fractional_laplacian",
    "heat_convolve",
    "hedberg_theta",
    "hl_maximal",
    "lp_norm",
    "luxemburg_norm",
    "orlicz_norm",
    "phi_maximal",
    "riemann_liouville_fraclap",
    "riesz_potential",
    "run_acceptance",
    "run_config",
    "sample_gaussian",
    "sample_random_band_limited",
    "sigma_exponent",
    "sobolev_conjugate",
    "weak_lorentz_norm",
]
