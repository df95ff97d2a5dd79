import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from adelgamma.analytic import kronecker_symbol
from adelgamma.characters import (
    GlobalCharacterQ,
    QuadCharacterData,
    build_character,
    canonical_generators,
    conductor_and_ranks,
    kappa_global,
    kronecker,
    parse_character,
    principal,
    sigma_of,
    ramified_exponentials,
    validate_quad_character,
)
from adelgamma.errors import NotOneClass, ParityViolation


def gauss_sum(chi):
    n = chi.modulus
    return sum(chi.value(a) * cmath.exp(2j * math.pi * a / n) for a in range(1, n))


def test_kronecker_matches_symbol():
    for D in (-4, -3, 5, 8, -7, 12, -8, 13):
        chi = kronecker(D)
        for n in range(1, 60):
            assert abs(chi.value(n) - kronecker_symbol(D, n)) < 1e-14


def test_conductor_parity_order():
    chi = kronecker(-4)
    assert conductor_and_ranks(chi) == (4, {2: 2}) and chi.parity == 1
    c5 = build_character(5, {2: Fraction(1, 4)})
    assert c5.order == 4 and abs(c5.value(4) + 1) < 1e-15 and abs(c5.value(3) + 1j) < 1e-15
    imprim = kronecker(-4) * principal(15)
    assert imprim.modulus == 60 and imprim.conductor == 4
    assert imprim.primitive() == kronecker(-4)
    assert canonical_generators(4) == (3,)


@pytest.mark.parametrize("text", ["principal", "kronecker:-4", "kronecker:12", "mod=5;2=1/4", "mod=20;11=1/2,17=1/4"])
def test_serialization_roundtrip(text):
    chi = parse_character(text)
    assert parse_character(chi.serialize()) == chi
    assert chi.serialize() == text


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([5, 7, 8, 9, 12, 15, 16, 21]), st.data())
def test_multiplicativity(n, data):
    gens = canonical_generators(n)
    turns = {g: Fraction(data.draw(st.integers(0, 11)), 12) for g in gens}
    try:
        chi = build_character(n, turns)
    except ValueError:
        return
    for a in range(1, n):
        for b in range(1, n):
            assert abs(chi.value(a * b) - chi.value(a) * chi.value(b)) < 1e-12


@pytest.mark.parametrize("text", ["kronecker:-4", "mod=5;2=1/4", "kronecker:12", "mod=20;11=1/2,17=1/4", "kronecker:-3"])
def test_kappa_against_gauss_sum(text):
    # tau(chi)/sqrt(N) = prod kappa(chi_p) (p^(i alpha_p))^(+rho_p)
    chi = parse_character(text).primitive()
    n0, ranks = conductor_and_ranks(chi)
    g = GlobalCharacterQ(chi)
    k = kappa_global(g)
    assert abs(abs(k) - 1) < 1e-12
    exp = ramified_exponentials(g)
    fix = 1
    for p, rho in ranks.items():
        fix *= exp.alpha(p) ** (2 * rho)
    assert abs(gauss_sum(chi) / math.sqrt(n0) - k * fix) < 1e-12


def test_parity_violation():
    with pytest.raises(ParityViolation):
        GlobalCharacterQ(kronecker(-4), nu=0)
    assert GlobalCharacterQ(kronecker(-4)).nu == 1


def test_sigma_of():
    chi = kronecker(-4)
    assert sigma_of(chi, chi.conj()).is_principal
    c5 = build_character(5, {2: Fraction(1, 4)})
    assert sigma_of(c5, c5) == (c5 * c5).conj()


def test_norm_induced_data():
    qc = QuadCharacterData(-1, "norm_induced", chi=build_character(5, {2: Fraction(1, 4)}))
    exp = validate_quad_character(qc)
    assert exp.max_modulus_defect(100) < 1e-12
    assert exp.kind(3) == "inert" and exp.kind(5) == "split" and exp.kind(2) == "ramified"
    qc3 = QuadCharacterData(3, "norm_induced", chi=kronecker(-4))
    assert qc3.nu == qc3.nu_prime == 1
    validate_quad_character(qc3)
    with pytest.raises(NotOneClass):
        validate_quad_character(QuadCharacterData(-5, "principal"))
