import math
import random

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from adelgamma.analytic import (
    DEFAULT_POLICY,
    KroneckerCharacter,
    PrecisionPolicy,
    dedekind_zeta_quadratic,
    dirichlet_l,
    euler_product,
    gamma,
    hurwitz_zeta,
    is_fundamental_discriminant,
    kronecker_symbol,
    log_gamma,
    riemann_zeta,
)
from adelgamma.errors import AccuracyNotReachable, PoleAtOne


def test_policy_validation_and_roundtrip():
    p = PrecisionPolicy.from_mapping({"series_terms": "60", "target_abs_err": 1e-11})
    assert p.series_terms == 60 and p.target_abs_err == 1e-11
    assert PrecisionPolicy.from_mapping(p.as_dict()) == p
    with pytest.raises(ValueError):
        PrecisionPolicy.from_mapping({"bogus": 1})
    with pytest.raises(ValueError):
        PrecisionPolicy(series_terms=0)


@pytest.mark.parametrize("z", [0.5, 3.7, -2.5, 0.1 + 20j, -7.3 + 2j, 40 - 3j])
def test_gamma_against_mpmath(z):
    ref = complex(mpmath.gamma(z))
    assert abs(gamma(z) - ref) <= 1e-12 * abs(ref)
    assert abs(log_gamma(z) - complex(mpmath.loggamma(z))) < 1e-12


def test_zeta_known_values():
    assert abs(riemann_zeta(2) - math.pi ** 2 / 6) < 1e-13
    assert abs(riemann_zeta(-1) + 1 / 12) < 1e-13
    assert abs(riemann_zeta(0) + 0.5) < 1e-13
    assert abs(riemann_zeta(-2)) < 1e-13
    with pytest.raises(PoleAtOne):
        riemann_zeta(1)


def test_hurwitz_against_mpmath_window():
    rng = random.Random(3)
    for _ in range(200):
        s = complex(rng.uniform(-10, 10), rng.uniform(-30, 30))
        if abs(s - 1) < 1e-3:
            continue
        a = rng.choice([1, 0.5, 0.25, 1 / 3, 0.75, 0.9])
        ref = complex(mpmath.zeta(s, a))
        got = hurwitz_zeta(s, a)
        assert abs(got - ref) <= 1e-10 * max(1.0, abs(ref)), (s, a)


def test_outside_window_raises():
    with pytest.raises(AccuracyNotReachable):
        riemann_zeta(complex(-30, 0))


def test_dirichlet_values():
    chi = KroneckerCharacter(-4)
    assert abs(dirichlet_l(1, chi) - math.pi / 4) < 1e-13
    assert abs(dirichlet_l(2, chi) - float(mpmath.catalan)) < 1e-13
    chi5 = KroneckerCharacter(5)
    ref = complex(mpmath.dirichlet(0.3 + 4j, [0, 1, -1, -1, 1]))
    assert abs(dirichlet_l(0.3 + 4j, chi5) - ref) < 1e-12


@settings(max_examples=30, deadline=None)
@given(st.floats(-3, 3), st.floats(-10, 10))
def test_dedekind_factorization(x, y):
    s = complex(x, y)
    if abs(s - 1) < 1e-2:
        return
    for D in (-4, -7, 8, 5):
        lhs = dedekind_zeta_quadratic(s, D)
        rhs = riemann_zeta(s) * dirichlet_l(s, KroneckerCharacter(D))
        assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(rhs))


def test_kronecker_symbol():
    assert [kronecker_symbol(-4, n) for n in range(1, 8)] == [1, 0, -1, 0, 1, 0, -1]
    assert kronecker_symbol(8, 3) == -1 and kronecker_symbol(8, 7) == 1
    assert is_fundamental_discriminant(-7) and not is_fundamental_discriminant(-8 * 2)
    with pytest.raises(ValueError):
        kronecker_symbol(12 * 4, 5)


def test_euler_product_truncation():
    chi = KroneckerCharacter(-4)
    assert abs(euler_product(3, chi, 10 ** 4) - dirichlet_l(3, chi)) < 1e-5
    assert abs(euler_product(3, chi, 10 ** 4, skip=[3]) / (1 + 3 ** -3) - dirichlet_l(3, chi)) < 1e-5


def test_policy_changes_nothing_visible():
    p = PrecisionPolicy(series_terms=80, bernoulli_terms=12)
    assert abs(riemann_zeta(0.5 + 14j, p) - riemann_zeta(0.5 + 14j, DEFAULT_POLICY)) < 1e-12
