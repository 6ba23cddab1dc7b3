"""Numerics for small Hankel operators on generalized Fock spaces ``F^{p,ell}_alpha``."""
from .errors import (
    BoundaryWarning,
    ConvergenceError,
    FockDomainError,
    SeriesTruncationError,
    TailWarning,
    UnderTruncationWarning,
)
from .estimates import (
    GammaSumBreakdown,
    chernoff_check,
    g_factor_norms,
    gamma_sum,
    gamma_sum_decomposed,
    i_integral_series,
)
from .fock import FockParams, dilate, kernel_eval, kernel_pointwise_ratio, monomial_norm_sq, sup_norm_weighted
from .hankel import (
    HankelMatrix,
    RadialDensity,
    hankel_bilinear_form,
    hankel_matrix,
    hs_norm_sq_formula,
    hs_norm_sq_L2,
    hs_norm_sq_truncated,
    symbol_delta_norm_sq,
    truncated_operator_norm,
)
from .quad import QuadratureSpec, bergman_project_quadrature, fock_p_norm, inner_product, reproduce_check
from .reports import RatioReport
from .specfun import SeriesControl, exp_weighted_sum, log_gamma, mittag_leffler, stirling_ratio
from .symbol import TaylorSymbol

__version__ = "0.1.0"
