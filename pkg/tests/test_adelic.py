import json
import math
from fractions import Fraction

import pytest

from adelgamma import adelic
from adelgamma.characters import GlobalCharacterQ, QuadCharacterData, build_character, kronecker, principal

C5 = build_character(5, {2: Fraction(1, 4)})
CHARS = [principal(1), kronecker(-4), C5, kronecker(12), kronecker(-4) * C5, kronecker(-3)]


def test_trivial_character_exact_point():
    rep = adelic.verify_gamma_adelic_Q(2, GlobalCharacterQ(principal(1)))
    assert rep.passed and abs(rep.lhs - 1) < 1e-13 and abs(rep.rhs - 1) < 1e-13
    assert abs(adelic.reg_gamma_ratio_Q(2, principal(1)) + 2 * math.pi ** 2) < 1e-12


@pytest.mark.parametrize("chi", CHARS, ids=lambda c: c.serialize())
def test_gamma_identity_over_q(chi):
    g = GlobalCharacterQ(chi)
    for pt in adelic.random_points(5, seed=3):
        rep = adelic.verify_gamma_adelic_Q(pt.alpha, g)
        assert rep.verdict == "pass", rep.to_json()


def test_calibration_constants():
    assert adelic.calibrate_kappa_phase("inverse") == 1
    assert adelic.calibrate_kappa_phase("direct") == -1


def test_direct_convention_not_a_global_constant():
    # after calibrating at chi_{-4} the direct kappa still fails modulo 5
    g = GlobalCharacterQ(C5)
    rep = adelic.verify_gamma_adelic_Q(0.3 + 2j, g, convention="direct")
    assert rep.verdict == "fail"
    assert adelic.verify_gamma_adelic_Q(0.3 + 2j, g, convention="direct", mode="modulus").passed


def test_trivial_zero_is_inconclusive():
    # L(-1, chi_{-4}) = 0 sits in the denominator at alpha = 2
    rep = adelic.verify_gamma_adelic_Q(2, GlobalCharacterQ(kronecker(-4)))
    assert rep.verdict == "inconclusive" and not rep.pole_guard_ok


@pytest.mark.parametrize("pair", [(kronecker(-4), kronecker(-4).conj()), (C5, C5), (kronecker(-4), C5), (principal(1), principal(1))])
def test_beta_identity_over_q(pair):
    theta, pi = (GlobalCharacterQ(x) for x in pair)
    for pt in adelic.random_points(4, seed=5):
        assert adelic.verify_beta_adelic_Q(pt, theta, pi).passed


def test_beta_is_product_of_gammas_when_ranks_agree():
    theta = pi = GlobalCharacterQ(C5)
    sigma = GlobalCharacterQ((C5 * C5).conj())
    for pt in adelic.random_points(4, seed=6):
        b = adelic.verify_beta_adelic_Q(pt, theta, pi)
        prod = 1
        for x, g in zip(pt.args, (theta, pi, sigma)):
            prod *= adelic.verify_gamma_adelic_Q(x, g).lhs
        assert abs(b.lhs - prod) < 1e-10 * max(1, abs(prod))


@pytest.mark.parametrize("d", [-1, -2, -3, -7, -11, -19, -43, -67, -163, 2, 3, 5, 7, 13, 94])
def test_sqrt_disc_identity(d):
    for pt in adelic.random_points(3, seed=d % 97):
        rep = adelic.verify_beta_quadratic_principal(d, pt)
        assert rep.passed, rep.to_json()


def test_gauss_field():
    for pt in adelic.random_points(5, seed=1):
        rep = adelic.verify_gauss_field(pt)
        assert rep.passed and rep.rhs == 2


@pytest.mark.parametrize("d,chi", [(-7, kronecker(-4)), (-1, C5), (3, C5), (-3, kronecker(5)), (-2, kronecker(-3))])
def test_norm_induced_quadratic(d, chi):
    qc = QuadCharacterData(d, "norm_induced", chi=chi)
    for pt in adelic.random_points(3, seed=2):
        rep = adelic.verify_gamma_adelic_quadratic(d, pt.alpha, qc)
        assert rep.passed, rep.to_json()


def test_principal_quadratic_and_explicit_diagnostic():
    for d in (-1, -7, 3):
        assert adelic.verify_gamma_adelic_quadratic(d, 0.4 + 3j, QuadCharacterData(d, "principal")).passed
    qc = QuadCharacterData(-1, "explicit", unit_values={"-1": 1, "i": 1}, divisor_values={})
    rep = adelic.verify_gamma_adelic_quadratic(-1, 0.4, qc, cutoff=100)
    assert rep.verdict == "diagnostic" and rep.truncated_partials


def test_report_json_deterministic():
    a = adelic.verify_beta_quadratic_principal(-7, adelic.IdentityPoint(0.3 + 1j, 0.4 - 2j)).to_json()
    b = adelic.verify_beta_quadratic_principal(-7, adelic.IdentityPoint(0.3 + 1j, 0.4 - 2j)).to_json()
    assert a == b
    data = json.loads(a)
    assert set(data) >= {"identity_id", "inputs", "lhs", "rhs", "residual", "pole_guard_ok", "verdict"}


def test_truncated_product_marks():
    parts = adelic.truncated_product(lambda p: 1 + 0j, 1000)
    assert [p for p, _ in parts] == [10, 100, 1000]
    with pytest.raises(ValueError):
        adelic.truncated_product(lambda p: 1, 10 ** 7)


def test_random_points_constraint():
    for pt in adelic.random_points(20, seed=9):
        assert abs(sum(pt.args) - 1) < 1e-12
        assert all(0.2 <= x.real <= 0.8 for x in pt.args)
