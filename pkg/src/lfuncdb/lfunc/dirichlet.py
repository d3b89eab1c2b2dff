"""Degree-1 L-values and completed functions.

Analytic continuation rides entirely on the Hurwitz zeta:

    L(s, chi) = N^-s sum_{a=1..N} chi(a) zeta(s, a/N)

so one Euler-Maclaurin engine covers zeta and every Dirichlet L-function in
the desk-scale window.  Completions:

    zeta:          Lambda(s) = pi^(-s/2) Gamma(s/2) zeta(s),  Lambda(s) = Lambda(1-s)
    primitive chi: Lambda(s) = (N/pi)^((s+a)/2) Gamma((s+a)/2) L(s, chi)
                   Lambda(s) = epsilon * conj(Lambda(1 - conj(s))),
                   epsilon   = tau(chi) / (i^a sqrt(N))
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import gamma as _gamma

from ..arith.characters import DirichletCharacter, char_eval
from .euler_maclaurin import PoleError, em_parts, zeta_em_many
from .model import KIND_DIRICHLET, KIND_ZETA, LFunction, UnsupportedKindError, root_number_of


def _pole_sum(coeffs: np.ndarray, log_ts: np.ndarray, s: np.ndarray) -> np.ndarray:
    """sum_a c_a T_a^(1-s) / (s-1), stable near s = 1 when sum c_a = 0.

    Near the pole the direct quotient is 0/0 up to cancellation error, so a
    short Taylor expansion in delta = s - 1 takes over:
        sum_a c_a e^(-delta L_a) / delta = sum_{k>=1} (-1)^k delta^(k-1) S_k / k!
    with S_k = sum_a c_a L_a^k.
    """
    delta = s - 1.0
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = (coeffs[None, :] * np.exp(np.multiply.outer(-delta, log_ts))).sum(axis=1) / delta
    # k = 0 term: exactly zero for zero-sum coefficients (snap the float
    # roundoff away), the genuine pole for a principal character evaluated
    # off (but near) s = 1
    s0 = complex(coeffs.sum())
    if abs(s0) < 1e-9:
        series = np.zeros_like(s)
    else:
        series = s0 / delta
    fact = 1.0
    for k in range(1, 13):
        fact *= k
        s_k = complex((coeffs * log_ts**k).sum())
        series = series + (-1) ** k * delta ** (k - 1) * s_k / fact
    return np.where(np.abs(delta) < 1e-3, series, direct)


def dirichlet_L_many(chi: DirichletCharacter, s) -> np.ndarray:
    """L(s, chi) on an array of s, via the Hurwitz-zeta identity.

    Defined on the whole continuation window of the Euler-Maclaurin engine;
    the only pole is at s = 1 for principal chi (where the Hurwitz poles
    fail to cancel).
    """
    s = np.atleast_1d(np.asarray(s, dtype=complex))
    n = chi.modulus
    if n == 1:
        return zeta_em_many(s)
    if chi.is_principal() and np.any(np.abs(s - 1.0) < 1e-12):
        raise PoleError("principal-character L-function has a pole at s = 1")
    total = np.zeros_like(s)
    coeffs, log_ts = [], []
    for a in range(1, n + 1):
        v = char_eval(chi, a)
        if v == 0:
            continue
        rest, log_t = em_parts(s, a / n)
        total = total + complex(v) * rest
        coeffs.append(complex(v))
        log_ts.append(log_t)
    total = total + _pole_sum(np.array(coeffs), np.array(log_ts), s)
    return np.exp(-s * math.log(n)) * total


def dirichlet_L(chi: DirichletCharacter, s: complex) -> complex:
    return complex(dirichlet_L_many(chi, np.array([s]))[0])


def completed_zeta(s: complex) -> complex:
    """xi(s) = pi^(-s/2) Gamma(s/2) zeta(s); satisfies xi(s) = xi(1-s)."""
    s = complex(s)
    value = zeta_em_many(np.array([s]))[0]
    return complex(np.pi ** (-s / 2) * _gamma(s / 2) * value)


def completed_dirichlet_many(chi: DirichletCharacter, s) -> np.ndarray:
    """Lambda(s, chi) on an array of s, for primitive chi."""
    s = np.atleast_1d(np.asarray(s, dtype=complex))
    if chi.modulus == 1:
        values = zeta_em_many(s)
        return np.pi ** (-s / 2) * _gamma(s / 2) * values
    if not chi.primitive:
        raise ValueError("completed L-functions need a primitive character")
    n, a = chi.modulus, chi.parity
    values = dirichlet_L_many(chi, s)
    return (n / np.pi) ** ((s + a) / 2) * _gamma((s + a) / 2) * values


def completed_dirichlet(chi: DirichletCharacter, s: complex) -> complex:
    """Lambda(s, chi) for primitive chi (reduces to xi for modulus 1)."""
    return complex(completed_dirichlet_many(chi, np.array([complex(s)]))[0])


def completed(lf: LFunction, s: complex) -> complex:
    """Completed function Lambda(s) of a degree-1 L-function."""
    if lf.kind == KIND_ZETA:
        return completed_zeta(s)
    if lf.kind == KIND_DIRICHLET:
        assert lf.character is not None
        return completed_dirichlet(lf.character, s)
    raise UnsupportedKindError(
        f"completed function is implemented for degree 1 only, not {lf.kind}")


def functional_equation_residual(lf: LFunction, s: complex) -> float:
    """|Lambda(s) - eps * conj(Lambda(1 - conj(s)))|, normalized for size."""
    left = completed(lf, s)
    right = completed(lf, 1 - s.conjugate()).conjugate()
    eps = lf.root_number if lf.root_number is not None else 1.0
    return abs(left - eps * right) / max(1.0, abs(left))


__all__ = [
    "completed",
    "completed_dirichlet",
    "completed_dirichlet_many",
    "completed_zeta",
    "dirichlet_L",
    "dirichlet_L_many",
    "functional_equation_residual",
    "root_number_of",
]
