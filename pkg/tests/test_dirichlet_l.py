import math

import numpy as np
import pytest

from lfuncdb.arith import (
    character_group,
    gauss_sum,
    kronecker_character,
    principal_character,
)
from lfuncdb.lfunc import (
    PoleError,
    UnsupportedKindError,
    character_lfunction,
    completed,
    completed_dirichlet,
    completed_zeta,
    dirichlet_L,
    dirichlet_L_many,
    ec_lfunction,
    functional_equation_residual,
    riemann_zeta_lfunction,
    root_number_of,
)


def chi4():
    return next(c for c in character_group(4) if c.order == 2)


def alternating_series_oracle(pairs=2 * 10**5):
    """1 - 1/3 + 1/5 - ... by pairing terms plus an integral tail bracket.

    Pairs: sum_k 2/((4k+1)(4k+3)); tail from K on lies between
    I(K) = (1/4) log((4K+3)/(4K+1)) and I(K) + f(K).  Returns (value, err).
    """
    k = np.arange(pairs, dtype=float)
    partial = float(np.sum(2.0 / ((4 * k + 1) * (4 * k + 3))))
    f_k = 2.0 / ((4 * pairs + 1) * (4 * pairs + 3))
    integral = 0.25 * math.log((4 * pairs + 3) / (4 * pairs + 1))
    return partial + integral + 0.5 * f_k, 0.5 * f_k


def test_L1_chi4_against_alternating_oracle():
    oracle, err = alternating_series_oracle()
    assert err < 1e-11
    value = dirichlet_L(chi4(), 1)
    assert abs(value - oracle) < 1e-10
    assert abs(value - math.pi / 4) < 1e-10


def test_principal_mod1_is_zeta():
    chi1 = principal_character(1)
    assert abs(dirichlet_L(chi1, 2) - math.pi**2 / 6) < 1e-10


def test_chi4_at_2_direct_series():
    n = np.arange(0, 10**6, dtype=float)
    direct = float(np.sum((-1.0) ** n / (2 * n + 1) ** 2))
    assert abs(dirichlet_L(chi4(), 2) - direct) < 1e-10


def test_continuation_consistency_on_re3():
    # truncated Dirichlet series at Re(s) = 3; tail below 1.3e-9 at X = 2e4
    rng = np.random.default_rng(11)
    x_max = 2 * 10**4
    for chi in (chi4(), kronecker_character(-3), kronecker_character(5)):
        lf = character_lfunction(chi, x_max)
        ts = rng.uniform(-15, 15, size=20)
        ss = 3.0 + 1j * ts
        values = dirichlet_L_many(chi, ss)
        n = np.arange(1, x_max + 1, dtype=float)
        coeffs = np.array([complex(c) for c in lf.coefficients[1:]])
        for s, v in zip(ss, values):
            direct = np.sum(coeffs * n ** (-s))
            assert abs(v - direct) < 1e-8


def test_pole_only_for_principal():
    with pytest.raises(PoleError):
        dirichlet_L(principal_character(1), 1)
    with pytest.raises(PoleError):
        dirichlet_L(principal_character(6), 1)
    # non-principal characters are fine at s = 1
    assert abs(dirichlet_L(chi4(), 1) - math.pi / 4) < 1e-10


def test_near_pole_branch_is_smooth():
    # the series/direct switchover at |s-1| = 1e-3 should be seamless
    chi = chi4()
    for d in (2e-3, 9.9e-4, 1e-5, 1e-7, 1e-3j, 1e-9j):
        v = dirichlet_L(chi, 1 + d)
        assert abs(v - math.pi / 4) < 0.01


def test_completed_zeta_functional_equation():
    assert abs(completed_zeta(0.3 + 2j) - completed_zeta(0.7 - 2j)) < 1e-9


def test_root_number_chi4():
    chi = chi4()
    assert abs(gauss_sum(chi) - 2j) < 1e-12
    assert abs(root_number_of(chi) - 1) < 1e-12


def test_completed_selfdual_real_at_half():
    lam = completed_dirichlet(chi4(), 0.5)
    assert abs(lam.imag) < 1e-10
    lam_z = completed_zeta(0.5)
    assert abs(lam_z.imag) < 1e-10


def test_functional_equation_random_points_all_real_primitive_to_50():
    from lfuncdb.arith import is_fundamental_discriminant
    from lfuncdb.lfunc import completed_dirichlet_many

    rng = np.random.default_rng(23)
    points = rng.uniform(0.2, 0.8, 100) + 1j * rng.uniform(-20, 20, 100)
    # real primitive characters with modulus <= 50 are exactly the
    # Kronecker characters of fundamental discriminants |D| <= 50,
    # plus the trivial character (zeta)
    discs = [d for d in range(-50, 51) if is_fundamental_discriminant(d)]
    reals = [principal_character(1)] + [kronecker_character(d) for d in discs]
    assert len(reals) > 25
    for chi in reals:
        eps = root_number_of(chi)
        assert abs(eps - 1) < 1e-10  # real primitive characters have eps = 1
        left = completed_dirichlet_many(chi, points)
        right = np.conj(completed_dirichlet_many(chi, 1 - np.conj(points)))
        resid = np.abs(left - eps * right) / np.maximum(1.0, np.abs(left))
        assert float(resid.max()) < 1e-9


def test_functional_equation_residual_scalar_helper():
    zeta_lf = riemann_zeta_lfunction(10)
    for s in (0.3 + 2j, 0.7 - 11j, 0.25 + 19j):
        assert functional_equation_residual(zeta_lf, s) < 1e-9


def test_completed_rejects_degree_two():
    from lfuncdb.arith import make_curve

    lf = ec_lfunction(make_curve([0, 0, 1, -1, 0], 37), 20)
    with pytest.raises(UnsupportedKindError):
        completed(lf, 2.0)


def test_completed_requires_primitive():
    with pytest.raises(ValueError):
        completed_dirichlet(principal_character(6), 2.0)
