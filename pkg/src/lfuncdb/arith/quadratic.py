"""Kronecker symbols and fundamental discriminants.

kronecker(D, .) for a fundamental discriminant D is the real primitive
character of conductor |D|; it drives the quadratic Dedekind-zeta
factorization zeta_K = zeta * L(chi_D).
"""

from __future__ import annotations

from .characters import DirichletCharacter, character_from_exponents, unit_group
from .primes import factorize


def is_discriminant(D: int) -> bool:
    """True when D = 0 or 1 mod 4 (the domain of the Kronecker symbol here)."""
    return D % 4 in (0, 1)


def is_fundamental_discriminant(D: int) -> bool:
    """Fundamental discriminant of a quadratic field (so D != 0, 1).

    Either D = 1 mod 4 and squarefree, or D = 4m with m = 2 or 3 mod 4
    and m squarefree.
    """
    if D in (0, 1):
        return False

    def squarefree(n: int) -> bool:
        return all(e == 1 for _, e in factorize(abs(n)).factors)

    if D % 4 == 1:
        return squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and squarefree(m)
    return False


def _kronecker_2(a: int) -> int:
    # (a/2): 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8
    if a % 2 == 0:
        return 0
    return 1 if a % 8 in (1, 7) else -1


def kronecker(D: int, n: int) -> int:
    """Kronecker symbol (D/n) for n >= 1.

    D must be a discriminant (0 or 1 mod 4); the result is the value at n
    of the real character of modulus |D|.
    """
    if not is_discriminant(D):
        raise ValueError(f"{D} is not 0 or 1 mod 4")
    if n < 1:
        raise ValueError(f"kronecker is defined here for n >= 1, got {n}")
    # peel off factors of 2, then a Jacobi-symbol loop with reciprocity
    a, m = D, n
    result = 1
    while m % 2 == 0:
        k = _kronecker_2(a)
        if k == 0:
            return 0
        result *= k
        m //= 2
    if m == 1:
        return result
    a %= m
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def kronecker_character(D: int) -> DirichletCharacter:
    """The real primitive character mod |D| attached to fundamental D."""
    if not is_fundamental_discriminant(D):
        raise ValueError(f"{D} is not a fundamental discriminant")
    N = abs(D)
    G = unit_group(N)
    exps = []
    for g, s in zip(G.generators, G.orders):
        v = kronecker(D, g)
        assert v in (1, -1)
        exps.append(0 if v == 1 else s // 2)
    chi = character_from_exponents(N, tuple(exps))
    assert chi.primitive and chi.order <= 2
    return chi
