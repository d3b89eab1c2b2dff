"""Exact Bernoulli numbers (B_1 = -1/2 convention)."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    """B_0 .. B_n as exact rationals, via sum_{j<=m} C(m+1, j) B_j = 0."""
    values = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum(math.comb(m + 1, j) * values[j] for j in range(m))
        values.append(Fraction(-acc, m + 1))
    return tuple(values)


@lru_cache(maxsize=None)
def em_weights(count: int) -> tuple[float, ...]:
    """B_{2j} / (2j)! for j = 1 .. count, as floats for the tail corrections."""
    bs = bernoulli_numbers(2 * count)
    return tuple(float(bs[2 * j] / math.factorial(2 * j)) for j in range(1, count + 1))
