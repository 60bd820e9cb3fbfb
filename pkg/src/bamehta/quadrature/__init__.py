"""Shifted-contour Gaussian quadrature."""

from .contour import PRINCIPAL_LOG, RATIONAL, ContourSpec, certify
from .integrands import (
    absolute_mm_integral,
    build_integrand_d21,
    build_integrand_deformed,
    build_integrand_identity,
    build_integrand_mm,
    d21_multiplicities,
    identity_rhs,
    power_product_integrand,
)
from .integrate import (
    MONTE_CARLO,
    TENSOR,
    Integrand,
    IndependenceReport,
    QuadConfig,
    QuadratureEstimate,
    contour_independence_check,
    integrand_from_callable,
    shifted_gaussian_integral,
)
from .kernels import BACKEND

__all__ = [
    "BACKEND", "ContourSpec", "IndependenceReport", "Integrand", "MONTE_CARLO", "PRINCIPAL_LOG", "QuadConfig",
    "QuadratureEstimate", "RATIONAL", "TENSOR", "absolute_mm_integral", "build_integrand_d21",
    "build_integrand_deformed", "build_integrand_identity", "build_integrand_mm", "certify",
    "contour_independence_check", "d21_multiplicities", "identity_rhs", "integrand_from_callable",
    "power_product_integrand", "shifted_gaussian_integral",
]
