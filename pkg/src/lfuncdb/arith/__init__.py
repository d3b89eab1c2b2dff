"""Exact arithmetic: sieves, factorization, Dirichlet characters, Gauss
sums, Kronecker symbols, and elliptic-curve point counting over F_p.

Everything here is a pure function of its inputs; character and curve
objects are frozen dataclasses, safe to share across threads.  The only
module state is a memoized prime sieve published once under a lock.
"""

from .characters import (
    MINUS_ONE,
    ONE,
    DirichletCharacter,
    RootOfUnity,
    char_eval,
    character_from_exponents,
    character_group,
    conductor_of,
    gauss_sum,
    principal_character,
    unit_group,
)
from .elliptic import (
    ADDITIVE,
    GOOD,
    MULT_NONSPLIT,
    MULT_SPLIT,
    EllipticCurveModel,
    ReductionData,
    ap_table,
    ec_ap,
    ec_point_count,
    make_curve,
)
from .primes import (
    Factorization,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    prime_array,
    sieve_primes,
)
from .quadratic import (
    is_discriminant,
    is_fundamental_discriminant,
    kronecker,
    kronecker_character,
)

__all__ = [
    "ADDITIVE",
    "GOOD",
    "MINUS_ONE",
    "MULT_NONSPLIT",
    "MULT_SPLIT",
    "ONE",
    "DirichletCharacter",
    "EllipticCurveModel",
    "Factorization",
    "ReductionData",
    "RootOfUnity",
    "ap_table",
    "char_eval",
    "character_from_exponents",
    "character_group",
    "conductor_of",
    "divisors",
    "ec_ap",
    "ec_point_count",
    "euler_phi",
    "factorize",
    "gauss_sum",
    "is_discriminant",
    "is_fundamental_discriminant",
    "is_prime",
    "kronecker",
    "kronecker_character",
    "make_curve",
    "prime_array",
    "principal_character",
    "sieve_primes",
    "unit_group",
]
