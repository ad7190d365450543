"""Hyperbolic and bicomplex numbers with zeta, gamma and roots-of-unity tooling.

Values are stored in idempotent form: a bicomplex number is the pair
``(z1, z2)`` of complex numbers with ``w = z1 e1 + z2 e2``, a hyperbolic
number is ``(p1, p2)`` with ``x + y j = p1 e1 + p2 e2``.
"""

from .bicomplex import (
    Bicomplex,
    DBall,
    DNorm,
    EUCLIDEAN_DNORM,
    J_MODULUS,
    arg_principal,
    as_bicomplex,
    check_dnorm_axioms,
    componentwise_dnorm,
    cone_classify,
    conjugate_u,
    d_angle,
    dball_contains,
    euclidean_norm,
    exp_b,
    format_cartesian,
    format_idempotent,
    i_R,
    inner_product_j,
    is_integral_dnorm,
    j_modulus,
    log_principal,
    polar_decompose,
    power,
    representations,
    riesz_subnorm,
    s_R,
    subnorm_of,
)
from .errors import (
    BadParameters,
    BicomplexError,
    DomainError,
    NearPole,
    NotInvertible,
    NotOnSphere,
    NotPositive,
    OnSingularSet,
    OutOfDomain,
    ParseError,
    PoleError,
    QuadratureFailure,
    ZeroInput,
)
from .hyperbolic import (
    Hyperbolic,
    HyperbolicInterval,
    SignElement,
    abs_h,
    exp_h,
    hyperbolic_square_modulus,
    interval_contains,
    is_hyperbolic_integer,
    is_in_cone,
    is_unit,
    lattice_inf,
    lattice_sup,
    ln_h,
    partial_leq,
    riesz_norm,
    sign_decompose,
    sqrt_positive,
    strict_lt,
    strictly_dominates,
)
from .parse import parse_literal
from .quadrature import QuadConfig
from .scalar import complex_gamma, complex_zeta
from .special import (
    DomainFlags,
    SeriesReport,
    domain_flags,
    euler_product,
    gamma_b,
    gamma_b_integral,
    is_trivial_zero,
    mellin_check,
    zeta_functional_residual,
    gamma_recurrence_residual,
    gamma_reflection_residual,
    weierstrass_gamma,
    zeta_b,
    zeta_b_series,
)
from .trig import (
    ToroidMesh,
    TrigForm,
    arccos_h,
    arcsin_h,
    chord_length,
    cos_b,
    cos_h,
    from_trig_form,
    nth_roots,
    roots_of_unity,
    sin_b,
    sin_h,
    to_trig_form,
    toroid_mesh,
    torus_coordinates,
    unit_dsphere_contains,
)

__version__ = "0.1.0"

__all__ = [
    "abs_h",
    "arccos_h",
    "arcsin_h",
    "arg_principal",
    "as_bicomplex",
    "BadParameters",
    "Bicomplex",
    "BicomplexError",
    "check_dnorm_axioms",
    "chord_length",
    "complex_gamma",
    "complex_zeta",
    "componentwise_dnorm",
    "cone_classify",
    "conjugate_u",
    "cos_b",
    "cos_h",
    "d_angle",
    "DBall",
    "dball_contains",
    "DNorm",
    "domain_flags",
    "DomainError",
    "DomainFlags",
    "EUCLIDEAN_DNORM",
    "euclidean_norm",
    "euler_product",
    "exp_b",
    "exp_h",
    "format_cartesian",
    "format_idempotent",
    "from_trig_form",
    "gamma_b",
    "gamma_b_integral",
    "Hyperbolic",
    "hyperbolic_square_modulus",
    "HyperbolicInterval",
    "i_R",
    "inner_product_j",
    "interval_contains",
    "is_hyperbolic_integer",
    "is_in_cone",
    "is_integral_dnorm",
    "is_trivial_zero",
    "is_unit",
    "j_modulus",
    "J_MODULUS",
    "lattice_inf",
    "lattice_sup",
    "ln_h",
    "log_principal",
    "mellin_check",
    "NearPole",
    "NotInvertible",
    "NotOnSphere",
    "NotPositive",
    "nth_roots",
    "OnSingularSet",
    "OutOfDomain",
    "parse_literal",
    "ParseError",
    "partial_leq",
    "polar_decompose",
    "PoleError",
    "power",
    "QuadConfig",
    "QuadratureFailure",
    "representations",
    "riesz_norm",
    "riesz_subnorm",
    "roots_of_unity",
    "s_R",
    "SeriesReport",
    "sign_decompose",
    "SignElement",
    "sin_b",
    "sin_h",
    "sqrt_positive",
    "strict_lt",
    "strictly_dominates",
    "subnorm_of",
    "zeta_functional_residual",
    "gamma_recurrence_residual",
    "gamma_reflection_residual",
    "to_trig_form",
    "toroid_mesh",
    "ToroidMesh",
    "torus_coordinates",
    "TrigForm",
    "unit_dsphere_contains",
    "weierstrass_gamma",
    "ZeroInput",
    "zeta_b",
    "zeta_b_series",
]
