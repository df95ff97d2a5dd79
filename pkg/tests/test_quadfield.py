
import pytest
from sympy import primerange

from adelgamma.errors import NotOneClass, NotSquarefree, SolverExhausted
from adelgamma.quadfield import (
    IMAGINARY_ONE_CLASS,
    SplitCase,
    classify_place,
    divisor_norm,
    embed,
    fundamental_unit,
    is_one_class,
    make_field,
    split_prime,
    splitting_matches_kronecker,
    torsion_units,
)


def test_field_data():
    f = make_field(-7)
    assert f.D == -7 and f.one_class and f.basis == "omega"
    assert make_field(-1).D == -4 and make_field(2).D == 8
    assert sorted(make_field(94).ramified_ranks) == [2, 47]
    with pytest.raises(NotSquarefree):
        make_field(12)
    assert classify_place(-1, 2) == "S" and classify_place(-1, 5) == "P" and classify_place(-1, 3) == "S"


def test_examples():
    f = split_prime(-7, 2)
    assert f.case == SplitCase.SPLIT_C_DOUBLE_PRIME and f.divisors == ((1, -1), (0, 1)) and f.hensel_root == 1
    g = split_prime(-1, 5)
    assert g.divisors == ((2, -1), (2, 1)) and g.hensel_root == 2
    assert split_prime(-1, 3).case == SplitCase.INERT_B and split_prime(-1, 3).q == 9
    assert split_prime(-1, 2).case == SplitCase.RAMIFIED_A
    with pytest.raises(NotOneClass):
        split_prime(-5, 3)


@pytest.mark.parametrize("d", IMAGINARY_ONE_CLASS)
def test_splitting_agrees_with_kronecker(d):
    for p in primerange(2, 400):
        assert splitting_matches_kronecker(d, p)
        for div in split_prime(d, p).divisors or ():
            assert divisor_norm(d, div) == p


def test_divisor_embedding():
    # the two divisors over a split prime are conjugate and multiply to p
    f = split_prime(-11, 5)
    a, b = (embed(-11, x) for x in f.divisors)
    assert abs(a * b - 5) < 1e-12 and abs(a - b.conjugate()) < 1e-12


def test_real_field_witnesses():
    for d in (2, 3, 6, 7):
        for p in primerange(2, 200):
            f = split_prime(d, p, strict=False)
            for div in f.divisors or ():
                assert abs(divisor_norm(d, div)) == p


def test_class_number_three_is_exhausted():
    # x^2 - 79 y^2 = +-3 has no solution: the primes over 3 are not principal
    with pytest.raises(SolverExhausted):
        split_prime(79, 3, strict=False)


@pytest.mark.parametrize(
    "d,xy,norm",
    [(2, (1, 1), -1), (3, (2, 1), 1), (7, (8, 3), 1), (94, (2143295, 221064), 1), (5, (0, 1), -1)],
)
def test_fundamental_units(d, xy, norm):
    u = fundamental_unit(d)
    assert (u.x, u.y) == xy and u.norm == norm
    assert u.value.real > 1


def test_one_class_list_and_torsion():
    assert is_one_class(-163) and not is_one_class(-5)
    assert len(torsion_units(-1)) == 4 and len(torsion_units(-3)) == 6 and len(torsion_units(7)) == 2
    for t in torsion_units(-3):
        assert abs(t.value ** 6 - 1) < 1e-12
