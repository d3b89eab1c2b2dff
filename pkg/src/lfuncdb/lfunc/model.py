"""The L-function object model and its standard constructors.

Four kinds are materialized at desk scale:

- riemann-zeta        degree 1, conductor 1
- dirichlet           degree 1, conductor N (primitive character)
- dedekind-quadratic  degree 2: zeta * L(chi_D) for a fundamental D
- elliptic-curve      degree 2, conductor N, from counted a_p

Weight follows the motivic normalization in which good inverse roots have
absolute value p^(w/2): a curve's factor 1 - a_p t + p t^2 has |roots| =
sqrt(p), so w = 1, and in that (arithmetic) normalization its critical
line sits at Re(s) = 1.  Degree-1 objects have w = 0 and critical line
Re(s) = 1/2; the line is recorded on every object so the two families are
never conflated downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..arith.characters import DirichletCharacter, RootOfUnity, char_eval, gauss_sum
from ..arith.elliptic import GOOD, EllipticCurveModel, ap_table
from ..arith.primes import sieve_primes
from ..arith.quadratic import is_fundamental_discriminant, kronecker, kronecker_character
from .series import EulerFactor, dirichlet_from_euler

KIND_ZETA = "riemann-zeta"
KIND_DIRICHLET = "dirichlet"
KIND_DEDEKIND_QUADRATIC = "dedekind-quadratic"
KIND_ELLIPTIC = "elliptic-curve"

# elliptic-curve coefficient bounds beyond this would need a smarter point
# count than the O(p)-per-prime sieve; refuse rather than stall
EC_COEFFICIENT_CAP = 200_000


class UnsupportedKindError(ValueError):
    """Operation not available for this L-function kind."""


class ExtendSieveError(ValueError):
    """Requested coefficient bound exceeds the supported sieve range."""


def root_number_of(chi: DirichletCharacter) -> complex:
    """Functional-equation sign for a primitive character:
    epsilon = tau(chi) / (i^a sqrt(N))."""
    n = chi.modulus
    if n == 1:
        return 1 + 0j
    return gauss_sum(chi) / (1j**chi.parity * math.sqrt(n))


@dataclass(frozen=True)
class LFunction:
    """An L-function with exact Dirichlet coefficients and local factors.

    coefficients[n] is a_n (index 0 unused and set to 0); entries are ints
    or RootOfUnity.  euler_factors carries the local polynomial at every
    prime up to the coefficient bound.  root_number is None when the sign
    has not been computed (degree-2 objects at desk scale).
    """

    kind: str
    degree: int
    conductor: int
    weight: int
    parity: int
    self_dual: bool
    critical_line: float
    coefficients: tuple
    euler_factors: tuple[tuple[int, EulerFactor], ...]
    root_number: complex | None = None
    character: DirichletCharacter | None = field(default=None, compare=False)
    origin: str | None = None

    @property
    def coefficient_bound(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, n: int):
        return self.coefficients[n]

    def euler_factor_map(self) -> dict[int, EulerFactor]:
        return dict(self.euler_factors)

    def validate(self) -> None:
        if self.coefficients[1] != 1:
            raise ValueError("a_1 must equal 1")
        if self.root_number is not None and abs(abs(self.root_number) - 1) > 1e-9:
            raise ValueError("root number must have modulus 1")
        for p, factor in self.euler_factors:
            if factor.degree > self.degree:
                raise ValueError(f"local degree at {p} exceeds global degree")
            if factor.degree < self.degree and self.conductor % p != 0:
                raise ValueError(
                    f"degenerate factor at good prime {p} (conductor {self.conductor})")


def _factors_for_primes(bound: int, make) -> dict[int, EulerFactor]:
    return {p: make(p) for p in sieve_primes(bound)}


def riemann_zeta_lfunction(bound: int = 100) -> LFunction:
    """zeta(s): every local factor is 1 - t; all coefficients are 1."""
    factors = _factors_for_primes(bound, lambda p: EulerFactor(p, (1, -1)))
    coeffs = dirichlet_from_euler(factors, bound)
    lf = LFunction(
        kind=KIND_ZETA,
        degree=1,
        conductor=1,
        weight=0,
        parity=0,
        self_dual=True,
        critical_line=0.5,
        coefficients=tuple(coeffs),
        euler_factors=tuple(sorted(factors.items())),
        root_number=1 + 0j,
        origin="Riemann",
    )
    lf.validate()
    return lf


def character_lfunction(chi: DirichletCharacter, bound: int = 100) -> LFunction:
    """L(s, chi) for a primitive character; a_n = chi(n), factors 1 - chi(p) t."""
    if not chi.primitive:
        raise ValueError("character L-functions are built from primitive characters")
    if chi.modulus == 1:
        return riemann_zeta_lfunction(bound)

    def make(p: int) -> EulerFactor:
        v = char_eval(chi, p)
        if v == 0:
            return EulerFactor(p, (1,))
        return EulerFactor(p, (1, _negate(v)))

    factors = _factors_for_primes(bound, make)
    coeffs = dirichlet_from_euler(factors, bound)
    lf = LFunction(
        kind=KIND_DIRICHLET,
        degree=1,
        conductor=chi.modulus,
        weight=0,
        parity=chi.parity,
        self_dual=chi.order <= 2,
        critical_line=0.5,
        coefficients=tuple(coeffs),
        euler_factors=tuple(sorted(factors.items())),
        root_number=root_number_of(chi),
        character=chi,
    )
    lf.validate()
    return lf


def _negate(v):
    if isinstance(v, RootOfUnity):
        return v * -1
    return -v


def dedekind_quadratic(disc: int, bound: int) -> LFunction:
    """Dedekind zeta of the quadratic field of fundamental discriminant disc.

    Factors as zeta(s) * L(s, chi_D): locally (1 - t)(1 - chi_D(p) t), and
    a_n counts the ideals of norm n.
    """
    if not is_fundamental_discriminant(disc):
        raise ValueError(f"{disc} is not a fundamental discriminant")
    chi = kronecker_character(disc)

    def make(p: int) -> EulerFactor:
        k = kronecker(disc, p)
        if k == 0:
            return EulerFactor(p, (1, -1))            # ramified: 1 - t
        if k == 1:
            return EulerFactor(p, (1, -2, 1))         # split: (1 - t)^2
        return EulerFactor(p, (1, 0, -1))             # inert: 1 - t^2

    factors = _factors_for_primes(bound, make)
    coeffs = dirichlet_from_euler(factors, bound)
    lf = LFunction(
        kind=KIND_DEDEKIND_QUADRATIC,
        degree=2,
        conductor=abs(disc),
        weight=0,
        parity=chi.parity,
        self_dual=True,
        critical_line=0.5,
        coefficients=tuple(coeffs),
        euler_factors=tuple(sorted(factors.items())),
        root_number=1 + 0j,
        character=chi,
    )
    lf.validate()
    return lf


def ec_lfunction(curve: EllipticCurveModel, bound: int) -> LFunction:
    """Degree-2 L-function of a rational elliptic curve.

    Good p: 1 - a_p t + p t^2 with a_p from the point count; multiplicative
    p: 1 - a_p t; additive p: 1.  Coefficients are exact integers.  The
    numerics stay in the convergent region Re(s) > 3/2 (critical-strip
    evaluation for degree 2 is out of scope), so no root number is stored.
    """
    if bound > EC_COEFFICIENT_CAP:
        raise ExtendSieveError(
            f"coefficient bound {bound} exceeds the supported range "
            f"{EC_COEFFICIENT_CAP} for curve coefficients")
    local = ap_table(curve, bound)

    def make(p: int) -> EulerFactor:
        red = local[p]
        if red.kind == GOOD:
            return EulerFactor(p, (1, -red.ap, p))
        if red.ap == 0:
            return EulerFactor(p, (1,))
        return EulerFactor(p, (1, -red.ap))

    factors = {p: make(p) for p in local}
    coeffs = dirichlet_from_euler(factors, bound)
    lf = LFunction(
        kind=KIND_ELLIPTIC,
        degree=2,
        conductor=curve.conductor,
        weight=1,
        parity=0,
        self_dual=True,
        critical_line=1.0,
        coefficients=tuple(coeffs),
        euler_factors=tuple(sorted(factors.items())),
        root_number=None,
    )
    lf.validate()
    return lf
