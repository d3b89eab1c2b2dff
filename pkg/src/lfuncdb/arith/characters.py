"""Dirichlet characters mod N with exact root-of-unity values.

A character is stored as an exponent vector over a fixed generator basis of
(Z/NZ)*: the basis comes from the CRT splitting of N into prime powers, with
the usual two generators -1, 5 for 2^k, k >= 3.  Values are exact pairs
(order, exponent) wrapped in RootOfUnity, so multiplicativity, orthogonality
and conductor computations never touch floating point.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .primes import euler_phi, factorize


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """exp(2*pi*i*turns) with turns an exact rational in [0, 1)."""

    turns: Fraction

    def __post_init__(self) -> None:
        if not 0 <= self.turns < 1:
            object.__setattr__(self, "turns", self.turns % 1)

    @classmethod
    def from_pair(cls, order: int, exponent: int) -> "RootOfUnity":
        return cls(Fraction(exponent, order))

    @property
    def order(self) -> int:
        return self.turns.denominator

    @property
    def exponent(self) -> int:
        return self.turns.numerator

    def as_pair(self) -> tuple[int, int]:
        """(order, exponent) in lowest terms."""
        return self.order, self.exponent

    def __mul__(self, other):
        if isinstance(other, RootOfUnity):
            return RootOfUnity(self.turns + other.turns)
        if other == 0:
            return 0
        if other == 1:
            return self
        if other == -1:
            return RootOfUnity(self.turns + Fraction(1, 2))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.turns * k)

    def conjugate(self) -> "RootOfUnity":
        return RootOfUnity(-self.turns)

    def __eq__(self, other) -> bool:
        if isinstance(other, RootOfUnity):
            return self.turns == other.turns
        if other == 1:
            return self.turns == 0
        if other == -1:
            return self.turns == Fraction(1, 2)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("RootOfUnity", self.turns))

    def __complex__(self) -> complex:
        return self.value

    @property
    def value(self) -> complex:
        t = self.turns
        # exact values on the axes keep downstream sums clean
        if t == 0:
            return 1 + 0j
        if t == Fraction(1, 2):
            return -1 + 0j
        if t == Fraction(1, 4):
            return 1j
        if t == Fraction(3, 4):
            return -1j
        return cmath.exp(2j * cmath.pi * float(t))

    def display(self) -> str:
        """Short exact form: 1, -1, i, -i or e(k/n) for exp(2*pi*i*k/n)."""
        t = self.turns
        if t == 0:
            return "1"
        if t == Fraction(1, 2):
            return "-1"
        if t == Fraction(1, 4):
            return "i"
        if t == Fraction(3, 4):
            return "-i"
        return f"e({t.numerator}/{t.denominator})"


ONE = RootOfUnity(Fraction(0))
MINUS_ONE = RootOfUnity(Fraction(1, 2))


def _primitive_root_mod_prime_power(p: int, e: int) -> int:
    """Smallest generator of the cyclic group (Z/p^e Z)*, p odd."""
    order = p - 1
    qs = [q for q, _ in factorize(order).factors]
    g = None
    for cand in range(2, p):
        if all(pow(cand, order // q, p) != 1 for q in qs):
            g = cand
            break
    assert g is not None
    if e == 1:
        return g
    # lift: g generates mod p^e unless g^(p-1) == 1 mod p^2
    if pow(g, p - 1, p * p) == 1:
        g += p
    return g


@dataclass(frozen=True)
class UnitGroup:
    """Generator basis and discrete-log table for (Z/NZ)*."""

    modulus: int
    generators: tuple[int, ...]
    orders: tuple[int, ...]
    _dlog: dict[int, tuple[int, ...]]

    def dlog(self, n: int) -> tuple[int, ...]:
        """Exponent vector of n over the generator basis; KeyError if n not a unit."""
        return self._dlog[n % self.modulus]

    @property
    def order(self) -> int:
        return len(self._dlog)


@lru_cache(maxsize=512)
def unit_group(modulus: int) -> UnitGroup:
    """Structure of (Z/NZ)* via CRT over the prime powers dividing N.

    Basis convention (fixed; labels depend on it): the 2-part first with
    generators (-1, 5) when 8 | N, then odd prime powers by increasing p,
    each contributing its smallest primitive root, all lifted to mod N
    by the CRT (g mod q, 1 mod N/q).
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    gens: list[int] = []
    orders: list[int] = []
    for p, e in factorize(modulus).factors:
        q = p**e
        rest = modulus // q
        def lift(g: int) -> int:
            if rest == 1:
                return g % modulus
            # x = g mod q, x = 1 mod rest
            inv_rest = pow(rest, -1, q)
            return (1 + rest * ((g - 1) * inv_rest % q)) % modulus
        if p == 2:
            if e == 1:
                continue  # trivial group
            if e == 2:
                gens.append(lift(3))
                orders.append(2)
            else:
                gens.append(lift(q - 1))  # -1
                orders.append(2)
                gens.append(lift(5))
                orders.append(q // 4)
        else:
            g = _primitive_root_mod_prime_power(p, e)
            gens.append(lift(g))
            orders.append((p - 1) * p ** (e - 1))
    # dense dlog table by enumerating the basis lattice
    table: dict[int, tuple[int, ...]] = {}
    for exps in itertools.product(*(range(s) for s in orders)):
        x = 1
        for g, k in zip(gens, exps):
            x = x * pow(g, k, modulus) % modulus
        table[x % modulus] = exps
    assert len(table) == euler_phi(modulus)
    return UnitGroup(modulus, tuple(gens), tuple(orders), table)


@dataclass(frozen=True)
class DirichletCharacter:
    """A homomorphism (Z/NZ)* -> C*, zero off the units.

    exponents[i] = c_i means the character sends the i-th basis generator
    (of order s_i) to exp(2*pi*i*c_i/s_i).  order, parity, conductor and
    primitivity are derived once at construction.
    """

    modulus: int
    exponents: tuple[int, ...]
    order: int
    parity: int  # 0 iff chi(-1) = 1
    conductor: int
    primitive: bool

    def __call__(self, n: int):
        return char_eval(self, n)

    def is_principal(self) -> bool:
        return self.order == 1

    def is_real(self) -> bool:
        return self.order <= 2

    def value_turns(self, n: int) -> Fraction | None:
        """Exact turns of chi(n), or None when chi(n) = 0."""
        G = unit_group(self.modulus)
        try:
            ks = G.dlog(n)
        except KeyError:
            return None
        t = Fraction(0)
        for k, c, s in zip(ks, self.exponents, G.orders):
            t += Fraction(k * c, s)
        return t % 1


def _char_order(G: UnitGroup, exponents: tuple[int, ...]) -> int:
    o = 1
    for c, s in zip(exponents, G.orders):
        o = math.lcm(o, s // math.gcd(s, c))
    return o


def _char_parity(G: UnitGroup, exponents: tuple[int, ...]) -> int:
    if G.modulus <= 2:
        return 0
    ks = G.dlog(G.modulus - 1)  # -1 is always a unit
    t = Fraction(0)
    for k, c, s in zip(ks, exponents, G.orders):
        t += Fraction(k * c, s)
    t %= 1
    assert t in (Fraction(0), Fraction(1, 2))
    return 0 if t == 0 else 1


def _raw_eval(G: UnitGroup, exponents: tuple[int, ...], n: int):
    try:
        ks = G.dlog(n)
    except KeyError:
        return 0
    t = Fraction(0)
    for k, c, s in zip(ks, exponents, G.orders):
        t += Fraction(k * c, s)
    return RootOfUnity(t % 1)


def char_eval(chi: DirichletCharacter, n: int):
    """chi(n) as a RootOfUnity, or the integer 0 when gcd(n, N) > 1."""
    return _raw_eval(unit_group(chi.modulus), chi.exponents, n)


def _conductor(G: UnitGroup, exponents: tuple[int, ...]) -> int:
    """Smallest d | N with chi trivial on units congruent to 1 mod d."""
    from .primes import divisors

    N = G.modulus
    for d in divisors(N):
        ok = True
        for n in range(1, N + 1, d) if d < N else [1]:
            if math.gcd(n, N) != 1:
                continue
            v = _raw_eval(G, exponents, n)
            if v != 1:
                ok = False
                break
        if ok:
            return d
    return N


def character_from_exponents(modulus: int, exponents) -> DirichletCharacter:
    """Build a character, deriving order, parity, conductor, primitivity."""
    G = unit_group(modulus)
    if len(tuple(exponents)) != len(G.orders):
        raise ValueError(
            f"expected {len(G.orders)} exponents for modulus {modulus}, got {len(tuple(exponents))}"
        )
    exps = tuple(int(c) % s for c, s in zip(exponents, G.orders))
    order = _char_order(G, exps)
    parity = _char_parity(G, exps)
    cond = _conductor(G, exps)
    return DirichletCharacter(
        modulus=modulus,
        exponents=exps,
        order=order,
        parity=parity,
        conductor=cond,
        primitive=(cond == modulus),
    )


def character_group(modulus: int) -> list[DirichletCharacter]:
    """All phi(N) characters mod N, in lexicographic exponent-vector order.

    The ordering is the label order: position j (1-based) in this list is
    the character's index in its "N.j" label.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    G = unit_group(modulus)
    return [
        character_from_exponents(modulus, exps)
        for exps in itertools.product(*(range(s) for s in G.orders))
    ]


def principal_character(modulus: int) -> DirichletCharacter:
    G = unit_group(modulus)
    return character_from_exponents(modulus, (0,) * len(G.orders))


def conductor_of(chi: DirichletCharacter) -> tuple[int, DirichletCharacter]:
    """(conductor, the primitive character inducing chi).

    The induced character chi' mod f agrees with chi on every n coprime to
    the original modulus; for m coprime to f only, chi'(m) is read off any
    representative n = m + k*f that is coprime to N.
    """
    f = chi.conductor
    if f == chi.modulus:
        return f, chi
    N = chi.modulus
    H = unit_group(f)
    exps = []
    for g, s in zip(H.generators, H.orders):
        n = g
        while math.gcd(n, N) != 1:
            n += f
        v = char_eval(chi, n)
        assert isinstance(v, RootOfUnity)
        t = v.turns * s
        assert t.denominator == 1, "induced value is not an s-th root of unity"
        exps.append(int(t) % s)
    prim = character_from_exponents(f, tuple(exps))
    assert prim.primitive
    return f, prim


def gauss_sum(chi: DirichletCharacter) -> complex:
    """tau(chi) = sum_{a mod N} chi(a) exp(2*pi*i*a/N); requires chi primitive.

    |tau|^2 = N for primitive characters, which the callers use as the
    functional-equation normalization.
    """
    if not chi.primitive:
        raise ValueError(f"gauss_sum needs a primitive character, conductor "
                         f"{chi.conductor} < modulus {chi.modulus}")
    N = chi.modulus
    total = 0 + 0j
    for a in range(1, N + 1):
        v = char_eval(chi, a)
        if v == 0:
            continue
        total += v.value * cmath.exp(2j * cmath.pi * a / N)
    return total
