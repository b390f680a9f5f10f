"""fracq: time-fractional Schrodinger box model built on Mittag-Leffler,
Fox H, and fractional-calculus primitives.

Layout: ``special`` (gamma kernels, branch conventions), ``mittag_leffler``
(series/asymptotic evaluation of E_{alpha,beta}), ``foxh`` (Fox H-function
parameters, classification, residue series, parameter-level transforms),
``fractional`` (Riemann-Liouville / Caputo / Riesz schemes on uniform
grids), ``model`` (the box model: wavefunction, probability, energy,
effective potential, product form), ``oracle`` (independent high-precision
and contour-integral routes used to cross-check everything else),
``acceptance`` (the numbered criteria), ``cli`` (the ``fracq`` command).
"""

from .acceptance import ALL_CRITERIA, CriterionResult, format_report, run_all
from .errors import (
    ContourError,
    ConvergenceError,
    DomainError,
    FracqError,
    ParamError,
    PoleError,
    PoleOnPathError,
    QuadratureError,
    RegionError,
    SingularityError,
    UnsupportedError,
)
from .foxh import (
    HConvergenceClass,
    HFunctionParams,
    HVerdict,
    PoleSide,
    h_check_simple_poles,
    h_classify,
    h_eval,
    h_invert_argument,
    h_laplace_params,
    h_parse,
    h_rl_derivative_params,
    h_serialize,
    h_series_expansion_I,
    h_series_expansion_II,
    ml_h_params,
)
from .fractional import (
    FracOrder,
    SampledFunction,
    caputo_derivative,
    composition_identity_residual,
    riesz_derivative,
    rl_derivative,
    rl_integral,
)
from .mittag_leffler import ml_asymptotic, ml_eval, ml_eval_ray, ml_real_imag, ml_series
from .model import (
    BoxModel,
    EffectivePotentialSample,
    box_eigenvalue,
    box_wavefunction,
    energy_expectation,
    energy_product_form,
    t_product_form,
    total_probability,
    total_probability_batch,
    total_probability_large_t,
    total_probability_small_t,
    v_eff,
    v_eff_series_small_t,
)
from .oracle import (
    BromwichConfig,
    FAlphaQuery,
    InversionMethod,
    bromwich_invert,
    f_alpha_quadrature,
    f_alpha_series,
    ml_highprec,
    t_via_pole_plus_integral,
)
from .special import (
    POLE_TOL,
    BranchConvention,
    ExcludedAlphaWarning,
    gamma_array,
    gamma_complex,
    i_pow,
    neg_lambda_root,
    recip_gamma,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "FracqError",
    "DomainError",
    "PoleError",
    "ParamError",
    "ConvergenceError",
    "RegionError",
    "UnsupportedError",
    "SingularityError",
    "QuadratureError",
    "ContourError",
    "PoleOnPathError",
    # special
    "POLE_TOL",
    "BranchConvention",
    "ExcludedAlphaWarning",
    "gamma_complex",
    "gamma_array",
    "recip_gamma",
    "neg_lambda_root",
    "i_pow",
    # mittag_leffler
    "ml_series",
    "ml_eval",
    "ml_eval_ray",
    "ml_real_imag",
    "ml_asymptotic",
    # foxh
    "HFunctionParams",
    "HConvergenceClass",
    "HVerdict",
    "PoleSide",
    "h_classify",
    "h_check_simple_poles",
    "h_series_expansion_I",
    "h_series_expansion_II",
    "h_eval",
    "h_invert_argument",
    "h_laplace_params",
    "h_rl_derivative_params",
    "ml_h_params",
    "h_serialize",
    "h_parse",
    # fractional
    "FracOrder",
    "SampledFunction",
    "rl_integral",
    "rl_derivative",
    "caputo_derivative",
    "riesz_derivative",
    "composition_identity_residual",
    # model
    "BoxModel",
    "EffectivePotentialSample",
    "box_eigenvalue",
    "box_wavefunction",
    "total_probability",
    "total_probability_batch",
    "total_probability_small_t",
    "total_probability_large_t",
    "energy_expectation",
    "energy_product_form",
    "t_product_form",
    "v_eff",
    "v_eff_series_small_t",
    # oracle
    "FAlphaQuery",
    "InversionMethod",
    "BromwichConfig",
    "ml_highprec",
    "bromwich_invert",
    "f_alpha_quadrature",
    "f_alpha_series",
    "t_via_pole_plus_integral",
    # acceptance
    "CriterionResult",
    "ALL_CRITERIA",
    "run_all",
    "format_report",
]
