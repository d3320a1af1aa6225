"""Exact coefficients, Borel-plane models, and generalized summation for two
factorially divergent torus-knot series, with the modular identities that pin
their boundary values.

The package is organized bottom-up: exact series and characters feed the
Borel-plane models, which feed the three summation routes; the modular layer
supplies the eta-function identities the summed values are tested against.
"""

from .borel import (
    SheetedPoint,
    Singularity,
    SqrtBranched,
    TailLaw,
    poincare_borel,
    taylor_coeffs,
    trefoil_borel,
)
from .characters import DirichletCharacter, chi12, chi60, l_series_partial, l_value_exact
from .errors import (
    ConvergenceError,
    DomainError,
    OnCutError,
    QuadratureError,
    RayGeometryError,
    ToleranceError,
)
from .invariants import (
    CoefficientTable,
    f_at_root_of_unity,
    phi,
    poincare_coeffs,
    q_factorial,
    trefoil_coeffs,
)
from .modular import eta, eta_prime, eta_tilde, eta_tilde_radial, zagier_g, zagier_g_taylor
from .series import FormalSeries, bernoulli_number, bernoulli_poly, borel_transform
from .specfun import dawson, dawson_deficit, e_mod_deficit, erfi
from .summation import (
    AverageKind,
    SummationResult,
    averaged_value,
    cross_routes,
    dirichlet_delta,
    radial_limit,
    sum_erfi,
    sum_eta_integral,
    sum_median,
)
from .transseries import (
    GammaFit,
    TransseriesReport,
    TransseriesTable,
    exact_bn,
    extract_ckl,
    stirling_gamma_fit,
    stirling_gammas,
    verify_transseries,
)

__version__ = "0.1.0"

__all__ = [
    "AverageKind",
    "CoefficientTable",
    "ConvergenceError",
    "DirichletCharacter",
    "DomainError",
    "FormalSeries",
    "GammaFit",
    "OnCutError",
    "QuadratureError",
    "RayGeometryError",
    "SheetedPoint",
    "Singularity",
    "SqrtBranched",
    "SummationResult",
    "TailLaw",
    "ToleranceError",
    "TransseriesReport",
    "TransseriesTable",
    "averaged_value",
    "bernoulli_number",
    "bernoulli_poly",
    "borel_transform",
    "chi12",
    "chi60",
    "cross_routes",
    "dawson",
    "dawson_deficit",
    "dirichlet_delta",
    "e_mod_deficit",
    "erfi",
    "eta",
    "eta_prime",
    "eta_tilde",
    "eta_tilde_radial",
    "exact_bn",
    "extract_ckl",
    "f_at_root_of_unity",
    "l_series_partial",
    "l_value_exact",
    "phi",
    "poincare_borel",
    "poincare_coeffs",
    "q_factorial",
    "radial_limit",
    "stirling_gamma_fit",
    "stirling_gammas",
    "sum_erfi",
    "sum_eta_integral",
    "sum_median",
    "taylor_coeffs",
    "trefoil_borel",
    "trefoil_coeffs",
    "verify_transseries",
    "zagier_g",
    "zagier_g_taylor",
]
