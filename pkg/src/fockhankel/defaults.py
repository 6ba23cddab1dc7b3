"""Versioned table of every threshold and default range used by the batch front-end.

Suites read tolerances only from :data:`DEFAULTS`; command-line overrides
replace entries of :data:`RANGES` and are echoed into each report header.
Bump :data:`DEFAULTS_VERSION` whenever a value changes.
"""
import math
from types import MappingProxyType

DEFAULTS_VERSION = "1.0"
SCHEMA_VERSION = "1"

DEFAULTS = MappingProxyType({
    # mittag-leffler / kernel
    "ml_rel_tol": 1e-12,
    "ml_asym_band": 100.0,
    "kernel_pointwise_max": 10.0,
    "kernel_scaling_rel_tol": 1e-10,
    # reproduce
    "reproduce_tol": 1e-8,
    # hankel-hs
    "hs_exact_rel_tol": 1e-10,
    "hs_truncated_rel_tol": 1e-10,
    "hs_symbol_band": 100.0,
    "hs_random_symbols": 50,
    "bilinear_adjoint_tol": 1e-9,
    "boundedness_band": 100.0,
    "diagonal_l2_rel_tol": 1e-8,
    # gamma-sum
    "gamma_exact_rel_tol": 1e-12,
    "gamma_band": 100.0,
    "gamma_decile_trend": 1.0,
    "gamma_partition_rel_tol": 1e-12,
    # i-integral
    "i_series_quad_rel_tol": 1e-6,
    "i_estimate_band": 100.0,
    # g-factors
    "g0_rel_tol": 1e-8,
    "g_factorization_rel_tol": 1e-12,
    "g_estimate_band": 100.0,
    "square_completion_tol": 1e-12,
})

# default sweep ranges; None means "use the suite's own list"
RANGES = MappingProxyType({
    "alpha": None,
    "ell": None,
    "p": None,
    "m_max": None,
    "trunc": None,
    "rel_tol": 1e-14,
    "grid_r": 9,
    "grid_theta": 8,
    "r_max": 4.0,
    "seed": 0,
})

P_VALUES = (1.0, 2.0, 4.0, math.inf)
