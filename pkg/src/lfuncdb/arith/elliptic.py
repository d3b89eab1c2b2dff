"""Elliptic curves over Q: Weierstrass models and point counts over F_p.

Counting is brute force over x, solving the quadratic in y (after the
completing-the-square substitution z = 2y + a1*x + a3 for p > 3, direct
enumeration for p in {2, 3}).  At desk scale (p <= 10^4) the O(p) count per
prime is fast enough to be its own oracle.

At a bad prime the smooth locus is counted instead: a_p = p - #E_ns(F_p)
gives +1 / -1 / 0 for split multiplicative / nonsplit / additive reduction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .primes import factorize, is_prime

GOOD = "good"
MULT_SPLIT = "multiplicative-split"
MULT_NONSPLIT = "multiplicative-nonsplit"
ADDITIVE = "additive"


@dataclass(frozen=True)
class EllipticCurveModel:
    """y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6, with known conductor.

    The conductor is ingested from curated data, never computed; the
    discriminant is derived from the coefficients.
    """

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    conductor: int

    def ainvs(self) -> tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b_invariants(self) -> tuple[int, int, int, int]:
        a1, a2, a3, a4, a6 = self.ainvs()
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def discriminant(self) -> int:
        b2, b4, b6, b8 = self.b_invariants
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def validate(self) -> None:
        if self.discriminant == 0:
            raise ValueError("singular model: discriminant is zero")
        if self.conductor < 1:
            raise ValueError("conductor must be positive")
        disc = abs(self.discriminant)
        for p, _ in factorize(self.conductor).factors:
            if disc % p != 0:
                raise ValueError(
                    f"conductor prime {p} does not divide the discriminant")


def make_curve(ainvs, conductor: int) -> EllipticCurveModel:
    curve = EllipticCurveModel(*(int(a) for a in ainvs), conductor=int(conductor))
    curve.validate()
    return curve


@dataclass(frozen=True)
class ReductionData:
    """Local data at p: reduction kind and the Dirichlet coefficient a_p."""

    prime: int
    kind: str
    ap: int

    def __post_init__(self) -> None:
        p, ap = self.prime, self.ap
        if self.kind == GOOD and ap * ap > 4 * p:
            raise ValueError(f"a_{p} = {ap} violates the Hasse bound")
        if self.kind in (MULT_SPLIT, MULT_NONSPLIT) and ap not in (1, -1):
            raise ValueError("multiplicative reduction needs a_p = +-1")
        if self.kind == ADDITIVE and ap != 0:
            raise ValueError("additive reduction needs a_p = 0")


def _count_small(curve: EllipticCurveModel, p: int) -> tuple[int, list[tuple[int, int]]]:
    """(affine point count, singular points) by full enumeration, p in {2,3}."""
    a1, a2, a3, a4, a6 = (a % p for a in curve.ainvs())
    points = []
    for x in range(p):
        for y in range(p):
            lhs = (y * y + a1 * x * y + a3 * y) % p
            rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p
            if lhs == rhs:
                points.append((x, y))
    singular = []
    for x, y in points:
        fx = (a1 * y - 3 * x * x - 2 * a2 * x - a4) % p
        fy = (2 * y + a1 * x + a3) % p
        if fx == 0 and fy == 0:
            singular.append((x, y))
    return len(points), singular


def _quartic_data(curve: EllipticCurveModel, p: int):
    """Values g(x) = 4x^3 + b2 x^2 + 2 b4 x + b6 mod p and a QR table, p > 3."""
    b2, b4, b6, _ = curve.b_invariants
    x = np.arange(p, dtype=np.int64)
    g = (4 * x % p * x % p * x + b2 % p * x % p * x + (2 * b4) % p * x + b6) % p
    sq = np.zeros(p, dtype=bool)
    sq[(x * x) % p] = True
    return g, sq


def ec_point_count(curve: EllipticCurveModel, p: int) -> int:
    """#E(F_p) including the point at infinity (singular points included
    verbatim if the reduction is bad; use ec_ap for local data)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p <= 3:
        affine, _ = _count_small(curve, p)
        return affine + 1
    g, sq = _quartic_data(curve, p)
    # solutions of z^2 = g(x): 1 for g = 0, 2 for nonzero squares, else 0
    per_x = np.where(g == 0, 1, np.where(sq[g], 2, 0))
    return int(per_x.sum()) + 1


def ec_ap(curve: EllipticCurveModel, p: int) -> ReductionData:
    """Reduction kind and trace a_p at the prime p.

    Good p: a_p = p + 1 - #E(F_p).  Bad p: a_p = p - #E_ns(F_p) where E_ns
    drops the (unique, rational) singular point; the sign then separates
    split from nonsplit multiplicative reduction.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if curve.discriminant % p != 0:
        ap = p + 1 - ec_point_count(curve, p)
        return ReductionData(p, GOOD, ap)
    if p <= 3:
        affine, singular = _count_small(curve, p)
        if not singular:
            return ReductionData(p, GOOD, p + 1 - (affine + 1))
        smooth = affine - len(singular) + 1
    else:
        g, sq = _quartic_data(curve, p)
        dg = (np.arange(p, dtype=np.int64) ** 2 % p * 12
              + (2 * curve.b_invariants[0]) % p * np.arange(p, dtype=np.int64)
              + (2 * curve.b_invariants[1])) % p
        sing_x = np.flatnonzero((g == 0) & (dg == 0))
        per_x = np.where(g == 0, 1, np.where(sq[g], 2, 0))
        if sing_x.size == 0:
            # p divides the discriminant of a non-minimal model only;
            # the reduced curve is smooth, so count as good
            return ReductionData(p, GOOD, p + 1 - (int(per_x.sum()) + 1))
        smooth = int(per_x.sum()) - int(sing_x.size) + 1
    ap = p - smooth
    if ap == 0:
        return ReductionData(p, ADDITIVE, 0)
    if ap == 1:
        return ReductionData(p, MULT_SPLIT, 1)
    if ap == -1:
        return ReductionData(p, MULT_NONSPLIT, -1)
    raise ArithmeticError(
        f"smooth-locus count {smooth} at bad prime {p} is inconsistent")


def ap_table(curve: EllipticCurveModel, limit: int) -> dict[int, ReductionData]:
    """Local data at every prime p <= limit."""
    from .primes import sieve_primes

    return {p: ec_ap(curve, p) for p in sieve_primes(limit)}
