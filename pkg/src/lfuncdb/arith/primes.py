"""Prime sieving, primality testing and exact integer factorization."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np

# Memoized sieve state.  Grown monotonically under the lock; the numpy flag
# array is never mutated after being published through _flags/_limit.
_lock = threading.Lock()
_flags: np.ndarray | None = None
_limit = 0


def _sieve_flags(limit: int) -> np.ndarray:
    """Boolean array f with f[n] = (n is prime), len limit+1, memoized."""
    global _flags, _limit
    if limit <= _limit and _flags is not None:
        return _flags
    with _lock:
        if limit <= _limit and _flags is not None:
            return _flags
        f = np.ones(limit + 1, dtype=bool)
        f[:2] = False
        for p in range(2, math.isqrt(limit) + 1):
            if f[p]:
                f[p * p :: p] = False
        _flags, _limit = f, limit
        return f


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit in ascending order; empty for limit < 2."""
    if limit < 2:
        return []
    f = _sieve_flags(limit)
    return [int(p) for p in np.flatnonzero(f[: limit + 1])]


def prime_array(limit: int) -> np.ndarray:
    """Primes <= limit as an int64 array (shares the memoized sieve)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    f = _sieve_flags(limit)
    return np.flatnonzero(f[: limit + 1]).astype(np.int64)


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic for n < 3.3 * 10^24 (the 12 smallest prime bases); above
    that the same fixed bases give a probabilistic check, which is all the
    desk-scale inputs here ever need.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """n as an ordered product of prime powers.

    factors is a tuple of (prime, exponent) pairs with strictly increasing
    primes and exponents >= 1; the empty tuple is the factorization of 1.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"factor list out of order at ({p},{e})")
            prod *= p**e
            last = p
        if prod != self.n:
            raise ValueError(f"factors do not multiply to {self.n}")

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's variant)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        x, y, d = 2, 2, 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"failed to split {n}")  # practically unreachable


def factorize(n: int) -> Factorization:
    """Exact factorization of n >= 1; n = 1 gives the empty product."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    m = n
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    # wheel over 6k +- 1 up to a fixed trial bound, then rho
    q = 7
    step = 4
    while q * q <= m and q < 1_000_000:
        while m % q == 0:
            out[q] = out.get(q, 0) + 1
            m //= q
        q += step
        step = 6 - step
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return Factorization(n, tuple(sorted(out.items())))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    ds = [1]
    for p, e in factorize(n).factors:
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def euler_phi(n: int) -> int:
    """Euler totient of n >= 1."""
    phi = 1
    for p, e in factorize(n).factors:
        phi *= (p - 1) * p ** (e - 1)
    return phi
