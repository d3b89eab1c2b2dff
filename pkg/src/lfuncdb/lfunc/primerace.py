"""Prime counts in residue classes: the equidistribution demonstration."""

from __future__ import annotations

import math

import numpy as np

from ..arith.primes import prime_array


def prime_race(modulus: int, bound: int) -> dict[int, int]:
    """Count primes p <= bound with p = a (mod modulus), per unit class a.

    Primes dividing the modulus are excluded (they fall in non-unit
    classes); the returned counts therefore sum to pi(bound) minus the
    number of primes dividing the modulus.
    """
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    if bound < modulus:
        raise ValueError("bound must be >= modulus")
    primes = prime_array(bound)
    residues = primes % modulus
    counts = np.bincount(residues, minlength=modulus)
    return {
        a: int(counts[a])
        for a in range(1, modulus)
        if math.gcd(a, modulus) == 1
    }
