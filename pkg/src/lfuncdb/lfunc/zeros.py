"""Critical-line zero isolation for self-dual degree-1 L-functions.

The rotated function

    Z(t) = exp(i theta(t)) L(1/2 + it),
    theta(t) = Im log Gamma((1/2 + a)/2 + it/2) + (t/2) log(N/pi)

is real for self-dual characters (root number +1), so zeros on the line
show up as sign changes of an honest real function.  Scans walk a fixed
grid, refine every sign change by bisection to 1e-8, and cross-check the
count against the smooth zero-count estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import loggamma

from .dirichlet import dirichlet_L_many
from .euler_maclaurin import zeta_em_many
from .model import KIND_DIRICHLET, KIND_ZETA, LFunction, UnsupportedKindError

BISECT_PRECISION = 1e-8
ZERO_VALUE_TOL = 1e-6


@dataclass(frozen=True)
class ZeroList:
    """Ascending zero ordinates with their common precision bound."""

    label: str
    ordinates: tuple[float, ...]
    precision: float

    def __post_init__(self) -> None:
        if list(self.ordinates) != sorted(self.ordinates):
            raise ValueError("ordinates must be ascending")


def _require_real_line(lf: LFunction) -> tuple[int, int]:
    """(conductor, parity) after checking Z(t) will be real."""
    if lf.kind not in (KIND_ZETA, KIND_DIRICHLET):
        raise UnsupportedKindError(
            f"critical-line machinery covers degree 1 only, not {lf.kind}")
    if not lf.self_dual:
        raise UnsupportedKindError(
            "non-self-dual characters are rejected: their rotated function "
            "needs the root-number phase, which is not implemented")
    if lf.root_number is not None and abs(lf.root_number - 1) > 1e-8:
        raise UnsupportedKindError("rotated function assumes root number +1")
    return lf.conductor, lf.parity


def z_values(lf: LFunction, ts) -> np.ndarray:
    """Z(t) on an array of ordinates."""
    n, a = _require_real_line(lf)
    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    s = 0.5 + 1j * ts
    if lf.kind == KIND_ZETA:
        lvals = zeta_em_many(s)
        theta = loggamma(s / 2).imag - (ts / 2) * math.log(math.pi)
    else:
        assert lf.character is not None
        lvals = dirichlet_L_many(lf.character, s)
        theta = loggamma((s + a) / 2).imag + (ts / 2) * math.log(n / math.pi)
    rotated = np.exp(1j * theta) * lvals
    return rotated.real


def z_function(lf: LFunction, t: float) -> float:
    """Z(t) = exp(i theta(t)) L(1/2 + it); real, with |Z(t)| = |L(1/2+it)|."""
    return float(z_values(lf, np.array([t]))[0])


def find_zeros(lf: LFunction, t_min: float, t_max: float, step: float = 0.05,
               label: str | None = None) -> ZeroList:
    """Zeros of Z on (t_min, t_max] by grid scan plus bisection.

    Every reported ordinate is bracketed by a sign change of width <=
    1e-8 and satisfies |Z| < 1e-6.  A step too coarse to separate close
    zeros is not detected here; cross-check counts with
    zero_count_estimate.
    """
    if not 0 <= t_min < t_max:
        raise ValueError("need 0 <= t_min < t_max")
    if step <= 0:
        raise ValueError("step must be positive")
    count = int(math.ceil((t_max - t_min) / step)) + 1
    grid = np.linspace(t_min, t_min + (count - 1) * step, count)
    values = z_values(lf, grid)

    ordinates = []
    for i in range(count - 1):
        if grid[i + 1] > t_max + 1e-12:
            break
        lo, hi = float(grid[i]), float(grid[i + 1])
        f_lo, f_hi = float(values[i]), float(values[i + 1])
        if f_lo == 0.0:
            if lo > t_min:
                ordinates.append(lo)
            continue
        if f_lo * f_hi >= 0:
            continue
        while hi - lo > BISECT_PRECISION:
            mid = 0.5 * (lo + hi)
            f_mid = z_function(lf, mid)
            if f_mid == 0.0:
                lo = hi = mid
                break
            if f_lo * f_mid < 0:
                hi = mid
            else:
                lo, f_lo = mid, f_mid
        t0 = 0.5 * (lo + hi)
        if abs(z_function(lf, t0)) >= ZERO_VALUE_TOL:
            raise ArithmeticError(
                f"bisection landed on t = {t0} where |Z| >= {ZERO_VALUE_TOL}")
        ordinates.append(t0)

    return ZeroList(
        label=label or lf.origin or f"{lf.kind}/{lf.conductor}",
        ordinates=tuple(ordinates),
        precision=BISECT_PRECISION,
    )


def zero_count_estimate(lf: LFunction, t: float) -> float:
    """Smooth main term for the number of zeros with ordinate in (0, t]:

        (t/2pi) log(t/(2 pi e)) + 7/8 + (t/2pi) log N

    Used as a completeness cross-check for scans (agreement within +-1
    expected in the desk-scale window)."""
    _require_real_line(lf)
    if t <= 2 * math.pi:
        raise ValueError("estimate is meaningful for t > 2*pi only")
    x = t / (2 * math.pi)
    return x * math.log(x / math.e) + 7 / 8 + x * math.log(lf.conductor)


def critical_line_samples(lf: LFunction, t_max: float, points: int) -> list[tuple[float, float]]:
    """Evenly spaced (t, Z(t)) samples on [0, t_max] for plotting."""
    if points < 1:
        raise ValueError("points must be >= 1")
    if t_max < 0:
        raise ValueError("t_max must be >= 0")
    if t_max == 0 or points == 1:
        ts = np.array([0.0])
    else:
        ts = np.linspace(0.0, t_max, points)
    zs = z_values(lf, ts)
    return [(float(t), float(z)) for t, z in zip(ts, zs)]


def sign_change_count(samples: list[tuple[float, float]]) -> int:
    signs = [z for _, z in samples if z != 0.0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)
