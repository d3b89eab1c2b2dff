"""L-function objects and numerics.

Evaluation strategy: one Euler-Maclaurin engine (Hurwitz zeta) continues
every degree-1 L-function across the desk-scale window; degree-2 objects
carry exact coefficients and Euler factors but are evaluated only in their
convergent region.  All computations are pure and reentrant; LFunction
values are immutable once built.
"""

from .dirichlet import (
    completed,
    completed_dirichlet,
    completed_dirichlet_many,
    completed_zeta,
    dirichlet_L,
    dirichlet_L_many,
    functional_equation_residual,
    root_number_of,
)
from .euler_maclaurin import (
    PoleError,
    em_parameters,
    hurwitz_zeta,
    hurwitz_zeta_many,
    zeta_em,
    zeta_em_many,
)
from .model import (
    EC_COEFFICIENT_CAP,
    KIND_DEDEKIND_QUADRATIC,
    KIND_DIRICHLET,
    KIND_ELLIPTIC,
    KIND_ZETA,
    ExtendSieveError,
    LFunction,
    UnsupportedKindError,
    character_lfunction,
    dedekind_quadratic,
    ec_lfunction,
    riemann_zeta_lfunction,
)
from .primerace import prime_race
from .series import (
    EulerFactor,
    MissingEulerFactorError,
    coefficient_display,
    dirichlet_from_euler,
)
from .zeros import (
    BISECT_PRECISION,
    ZERO_VALUE_TOL,
    ZeroList,
    critical_line_samples,
    find_zeros,
    sign_change_count,
    z_function,
    z_values,
    zero_count_estimate,
)

__all__ = [
    "BISECT_PRECISION",
    "EC_COEFFICIENT_CAP",
    "KIND_DEDEKIND_QUADRATIC",
    "KIND_DIRICHLET",
    "KIND_ELLIPTIC",
    "KIND_ZETA",
    "ZERO_VALUE_TOL",
    "EulerFactor",
    "ExtendSieveError",
    "LFunction",
    "MissingEulerFactorError",
    "PoleError",
    "UnsupportedKindError",
    "ZeroList",
    "character_lfunction",
    "coefficient_display",
    "completed",
    "completed_dirichlet",
    "completed_dirichlet_many",
    "completed_zeta",
    "critical_line_samples",
    "dedekind_quadratic",
    "dirichlet_L",
    "dirichlet_L_many",
    "dirichlet_from_euler",
    "ec_lfunction",
    "em_parameters",
    "find_zeros",
    "functional_equation_residual",
    "hurwitz_zeta",
    "hurwitz_zeta_many",
    "prime_race",
    "riemann_zeta_lfunction",
    "root_number_of",
    "sign_change_count",
    "z_function",
    "z_values",
    "zero_count_estimate",
    "zeta_em",
    "zeta_em_many",
]
