"""pathroots: path/cycle graph characteristic polynomials, adaptive-precision
root solving, ellipse fitting of root clouds, and exact theorem checks."""

__version__ = "0.1.0"

from .fit import DegenerateGeometry, EllipseFit, EllipseSpec, eccentricity, fit_ellipse, rmse
from .poly import (
    GaussianRational,
    IntPolynomial,
    chebyshev_t,
    chebyshev_u,
    compose_u_neg_half,
    cycle_charpoly,
    eval_exact,
    lemma_fib_check,
    path_charpoly,
    path_charpoly_recursive,
)
from .report import VerificationReport
from .roots import (
    DegreeZero,
    PrecisionConfig,
    PrecisionExhausted,
    RootSet,
    ShiftedProblem,
    path_zero_roots,
    real_root_count_exact,
    solve,
)
from .seq import binomial, fib_binomial_identity_check, fibonacci, pell

__all__ = [
    "DegenerateGeometry",
    "DegreeZero",
    "EllipseFit",
    "EllipseSpec",
    "GaussianRational",
    "IntPolynomial",
    "PrecisionConfig",
    "PrecisionExhausted",
    "RootSet",
    "ShiftedProblem",
    "VerificationReport",
    "binomial",
    "chebyshev_t",
    "chebyshev_u",
    "compose_u_neg_half",
    "cycle_charpoly",
    "eccentricity",
    "eval_exact",
    "fib_binomial_identity_check",
    "fibonacci",
    "fit_ellipse",
    "lemma_fib_check",
    "path_charpoly",
    "path_charpoly_recursive",
    "path_zero_roots",
    "pell",
    "real_root_count_exact",
    "rmse",
    "solve",
]
