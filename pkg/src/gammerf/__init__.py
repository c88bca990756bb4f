"""gammerf: incomplete gamma / error-function kernels, erfc-weighted Laplace
reductions, and a harness that verifies each identity through two independent
numerical routes."""

__version__ = "0.1.0"

from .errors import (
    ConvergenceError,
    DomainError,
    IntegrandError,
    UnsupportedPairKindError,
)
from .result import EvalResult
from .quadrature import (
    DEFAULT_CONFIG,
    IntervalSpec,
    QuadConfig,
    finite_interval,
    half_line,
    integrate,
    integrate_theta,
)
from .kernel import (
    erf,
    erfc,
    erfcx,
    gamma_fn,
    ln_gamma,
    lower_gamma,
    regularized_p,
)
from .records import CheckRecord, SkippedPoint
from .laplace import (
    TransformPair,
    default_registry,
    make_dirac,
    make_exponential,
    make_power,
    parse_pair,
    verify_pair,
)
from .transforms import (
    ReductionForm,
    erfc_linear_moment,
    erfc_moment,
    erfc_weighted_exp_integral,
    erfc_weighted_integral,
    exp_erfc_moment_rhs,
    gauss_lorentz_closed,
    gauss_lorentz_integral,
    gauss_singular_closed,
    gauss_singular_integral,
)
from .identities import (
    GridResult,
    IdentitySpec,
    catalog,
    get_identity,
    run_grid,
    run_identity,
)
from .report import Report, write_csv

__all__ = [
    "ConvergenceError",
    "DomainError",
    "IntegrandError",
    "UnsupportedPairKindError",
    "EvalResult",
    "QuadConfig",
    "IntervalSpec",
    "DEFAULT_CONFIG",
    "finite_interval",
    "half_line",
    "integrate",
    "integrate_theta",
    "ln_gamma",
    "gamma_fn",
    "lower_gamma",
    "regularized_p",
    "erf",
    "erfc",
    "erfcx",
    "CheckRecord",
    "SkippedPoint",
    "TransformPair",
    "make_power",
    "make_dirac",
    "make_exponential",
    "verify_pair",
    "default_registry",
    "parse_pair",
    "ReductionForm",
    "erfc_weighted_integral",
    "erfc_weighted_exp_integral",
    "erfc_moment",
    "erfc_linear_moment",
    "gauss_singular_integral",
    "gauss_singular_closed",
    "gauss_lorentz_integral",
    "gauss_lorentz_closed",
    "exp_erfc_moment_rhs",
    "IdentitySpec",
    "GridResult",
    "catalog",
    "get_identity",
    "run_identity",
    "run_grid",
    "Report",
    "write_csv",
    "__version__",
]
