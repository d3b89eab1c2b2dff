"""Euler-product <-> Dirichlet-series expansion, exact.

Local factors are polynomials P_p(t) with constant term 1.  Expanding
L = prod_p 1/P_p(p^-s) into sum a_n n^-s amounts to inverting each P_p as a
power series (giving a_{p^k}) and assembling the rest multiplicatively.
Coefficients stay exact: integers for integral factors, RootOfUnity values
for degree-1 character factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..arith.characters import RootOfUnity


class MissingEulerFactorError(ValueError):
    """A prime <= the coefficient bound has no supplied local factor."""


@dataclass(frozen=True)
class EulerFactor:
    """Local factor P_p(t) = 1 + c_1 t + ... + c_d t^d (c_0 = 1 enforced).

    Coefficients are exact: ints, Fractions, or RootOfUnity (degree-1
    character factors only).
    """

    p: int
    coefficients: tuple

    def __post_init__(self) -> None:
        if not self.coefficients or self.coefficients[0] != 1:
            raise ValueError("Euler factor must have constant term 1")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def inverse_coefficients(self, count: int) -> list:
        """First count+1 power-series coefficients of 1/P_p(t), exact.

        These are the prime-power Dirichlet coefficients a_{p^k},
        k = 0 .. count.
        """
        cs = self.coefficients
        if len(cs) == 1:
            return [1] + [0] * count
        if len(cs) == 2:
            # linear factor: a_{p^k} = (-c1)^k; stays a root of unity or int
            c = cs[1]
            out = [1]
            for _ in range(count):
                prev = out[-1]
                nxt = -(prev * c) if not isinstance(c, RootOfUnity) else _neg_mul(prev, c)
                out.append(nxt)
            return out
        # general recurrence b_k = -sum_{j=1..min(k,d)} c_j b_{k-j}
        out = [1]
        for k in range(1, count + 1):
            acc = 0
            for j in range(1, min(k, self.degree) + 1):
                acc += cs[j] * out[k - j]
            out.append(-acc)
        return out

    def as_complex_poly(self) -> np.ndarray:
        return np.array([complex(c) for c in self.coefficients])


def _neg_mul(prev, c: RootOfUnity):
    if prev == 0:
        return 0
    return (prev * c) * -1


def value_mul(u, v):
    """Product of exact coefficient values (ints / Fractions / RootOfUnity)."""
    if u == 0 or v == 0:
        return 0
    if isinstance(u, RootOfUnity) or isinstance(v, RootOfUnity):
        return u * v
    return u * v


def smallest_prime_factors(limit: int) -> np.ndarray:
    """spf[n] = smallest prime factor of n, for 0 <= n <= limit."""
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if spf[p] == 0:
            spf[p::p][spf[p::p] == 0] = p
    return spf


def dirichlet_from_euler(factors: dict[int, EulerFactor], bound: int) -> list:
    """Dirichlet coefficients a_1 .. a_bound from local factors.

    Returns a list a with a[0] = 0 (unused) so that a[n] is literally a_n.
    Every prime <= bound must have a factor; coefficients are exactly
    multiplicative by construction.
    """
    if bound < 1:
        raise ValueError("coefficient bound must be >= 1")
    spf = smallest_prime_factors(bound)
    a: list = [0] * (bound + 1)
    a[1] = 1
    prime_powers: dict[int, list] = {}
    for n in range(2, bound + 1):
        p = int(spf[n])
        if p == n or _is_power_of(n, p):
            if p not in prime_powers:
                if p not in factors:
                    raise MissingEulerFactorError(
                        f"no Euler factor supplied for prime {p} <= {bound}")
                kmax = 1
                while p ** (kmax + 1) <= bound:
                    kmax += 1
                prime_powers[p] = factors[p].inverse_coefficients(kmax)
            k = _power_exponent(n, p)
            a[n] = prime_powers[p][k]
        else:
            # split off the full p-part and use multiplicativity
            m = n
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            a[n] = value_mul(a[p**k], a[m])
    return a


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _power_exponent(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def coefficient_display(value) -> str:
    """Canonical short text for an exact coefficient value."""
    if isinstance(value, RootOfUnity):
        return value.display()
    if isinstance(value, Fraction):
        return str(value)
    return str(int(value))
