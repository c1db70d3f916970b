"""Exact tools for apparent singularities of linear ODEs.

Build Heun-class equations with rational parameters, analyze their
singular points and Riemann symbols, generate apparent singularities by
the derivative transform, remove them again by inverse differentiation,
and solve the polymer coil-stretch spectral problem numerically.
"""

from .errors import (
    AlreadyIntegratedError,
    ApparentError,
    BothZeroError,
    DegenerateApparentPointError,
    DegenerateGeometryError,
    DegenerateLeadingError,
    FuchsianIdentityError,
    IrregularPointError,
    NoEigenvalueInWindowError,
    NotAnExponentError,
    NotAnODEError,
    NotConfluentClassError,
    NotFuchsianError,
    NothingToRemoveError,
    NotRemovableError,
    NotSingularError,
    PrecisionExhaustedError,
    SingularMoebiusError,
    UnresolvedFactorError,
    ZeroPolynomialError,
)
from .polyrat import (
    RatFunc,
    RatPoly,
    as_fraction,
    exact_div,
    poly_derivative,
    poly_gcd,
    radical,
    rational_roots,
)
from .odemodel import (
    INFINITY,
    FuchsReport,
    LinearODE,
    PointKind,
    RiemannSymbol,
    SingularPoint,
    fuchs_check,
    leading_residual,
    make_ode,
    moebius_transform,
    riemann_symbol,
    singular_points,
)
from .frobenius import (
    ApparentVerdict,
    FrobeniusSolution,
    IndicialExponents,
    classify_point,
    frobenius_series,
    indicial_exponents,
    indicial_polynomial,
    is_apparent,
    substitution_rows,
)
from .transform import (
    UNVERIFIED_GAP,
    DeformResult,
    UndeformResult,
    deform,
    deform_iter,
    undeform,
)
from .heun import (
    ConfluentHeunParams,
    HeunParams,
    MultiHeunParams,
    ThirdOrderParams,
    confluent_heun,
    general_heun,
    multi_heun,
    third_order_example,
)
from .polymer import (
    HighFloat,
    PolymerParams,
    SpectralResult,
    apparent_location,
    eigenfunction_samples,
    polymer_deformed,
    polymer_ode,
    solve_spectrum,
    wronskian_mismatch,
)

__version__ = "0.1.0"

__all__ = [
    "APPARENT_SCHEMA",
    "AlreadyIntegratedError",
    "ApparentError",
    "ApparentVerdict",
    "BothZeroError",
    "ConfluentHeunParams",
    "DeformResult",
    "DegenerateApparentPointError",
    "DegenerateGeometryError",
    "DegenerateLeadingError",
    "FrobeniusSolution",
    "FuchsReport",
    "FuchsianIdentityError",
    "HeunParams",
    "HighFloat",
    "INFINITY",
    "IndicialExponents",
    "IrregularPointError",
    "LinearODE",
    "MultiHeunParams",
    "NoEigenvalueInWindowError",
    "NotAnExponentError",
    "NotAnODEError",
    "NotConfluentClassError",
    "NotFuchsianError",
    "NothingToRemoveError",
    "NotRemovableError",
    "NotSingularError",
    "PointKind",
    "PolymerParams",
    "PrecisionExhaustedError",
    "RatFunc",
    "RatPoly",
    "RiemannSymbol",
    "SingularMoebiusError",
    "SingularPoint",
    "SpectralResult",
    "ThirdOrderParams",
    "UNVERIFIED_GAP",
    "UndeformResult",
    "UnresolvedFactorError",
    "ZeroPolynomialError",
    "apparent_location",
    "as_fraction",
    "classify_point",
    "confluent_heun",
    "deform",
    "deform_iter",
    "eigenfunction_samples",
    "exact_div",
    "frobenius_series",
    "fuchs_check",
    "general_heun",
    "indicial_exponents",
    "indicial_polynomial",
    "is_apparent",
    "leading_residual",
    "make_ode",
    "moebius_transform",
    "multi_heun",
    "poly_derivative",
    "poly_gcd",
    "polymer_deformed",
    "polymer_ode",
    "radical",
    "rational_roots",
    "riemann_symbol",
    "singular_points",
    "solve_spectrum",
    "substitution_rows",
    "third_order_example",
    "undeform",
    "wronskian_mismatch",
]

APPARENT_SCHEMA = "apparent/v1"
