"""Numerical verification of Hardy-type inequalities.

Riesz potentials and fractional Laplacians on periodic grids, discrete
Hardy–Littlewood maximal operators, the near/far split of the Hardy
kernel with its dual operator, and checks of the classical, gradient and
fractional Hardy inequalities.
"""

from .grid import Exponents, GridFunction, GridSpec, HalfLineFunction, HalfLineGrid, integrate, lp_norm, weighted_integral
from .hardy import (
    HardyResult,
    cazenave_check,
    classical_hardy_check,
    classical_sharpness_sweep,
    empirical_constant,
    endpoint_blowup,
    fractional_hardy_quotient,
    interpolation_check,
)
from .maximal import MaximalConfig, corollary_op, maximal_centered, maximal_uncentered, strong_pp_ratio, weak11_constant
from .spectral import frac_laplacian, gradient, riesz_kernel_convolution, riesz_potential, sobolev_norm
from .splitting import SplitConfig, b2_majorant, dual_T, duality_check, split_operator

__all__ = [
    "Exponents", "GridFunction", "GridSpec", "HalfLineFunction", "HalfLineGrid",
    "integrate", "lp_norm", "weighted_integral",
    "HardyResult", "cazenave_check", "classical_hardy_check", "classical_sharpness_sweep",
    "empirical_constant", "endpoint_blowup", "fractional_hardy_quotient", "interpolation_check",
    "MaximalConfig", "corollary_op", "maximal_centered", "maximal_uncentered",
    "strong_pp_ratio", "weak11_constant",
    "frac_laplacian", "gradient", "riesz_kernel_convolution", "riesz_potential", "sobolev_norm",
    "SplitConfig", "b2_majorant", "dual_T", "duality_check", "split_operator",
]

__version__ = "0.1.0"
