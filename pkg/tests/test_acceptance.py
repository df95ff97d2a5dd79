"""Acceptance criteria 1-11.  Each test prints one PASS/FAIL line.

Run standalone with ``python3 tests/test_acceptance.py`` for the summary only.
"""

import math
import random
import time

import pytest

from adelgamma import adelic, amplitudes as amp
from adelgamma.analytic import KroneckerCharacter, dirichlet_l, euler_product, kronecker_symbol, riemann_zeta
from adelgamma.characters import GlobalCharacterQ, build_character, kronecker, principal
from adelgamma.local import gamma_complex, gamma_q, gamma_real
from adelgamma.quadfield import IMAGINARY_ONE_CLASS, SplitCase, divisor_norm, fundamental_unit, split_prime

from fractions import Fraction

_LINES = []


def _line(n: int, ok: bool, msg: str, elapsed: float) -> None:
    text = f"CRITERION {n:>2}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f} s) {msg}"
    _LINES.append(text)
    print(text)


@pytest.fixture
def say(capsys):
    def emit(n, ok, msg, elapsed):
        with capsys.disabled():
            print()
            _line(n, ok, msg, elapsed)
    return emit


def _mod5_order4():
    return build_character(5, {2: Fraction(1, 4)})


# ---------------------------------------------------------------------------


def check_1():
    rng = random.Random(1)
    worst = 0.0
    t0 = time.perf_counter()
    for _ in range(100):
        a = complex(rng.uniform(-4, 4), rng.uniform(-10, 10))
        nu = rng.randrange(2)
        worst = max(worst, abs(gamma_real(a, nu) * gamma_real(1 - a, nu) - (-1) ** nu))
        m = rng.randrange(-3, 4)
        worst = max(worst, abs(gamma_complex(a, m) * gamma_complex(1 - a, m) - (-1) ** m))
        q = rng.choice((2, 3, 4, 5, 7, 9, 25, 121))
        worst = max(worst, abs(gamma_q(a, q) * gamma_q(1 - a, q) - 1))
    dt = time.perf_counter() - t0
    ok = worst < 1e-10 and dt < 1
    return ok, f"local reflections, worst residual {worst:.2e}", dt


def check_2():
    t0 = time.perf_counter()
    chi = KroneckerCharacter(-4)
    errs = [
        abs(riemann_zeta(2) - math.pi ** 2 / 6),
        abs(riemann_zeta(-1) + 1 / 12),
        abs(dirichlet_l(1, chi) - math.pi / 4),
    ]
    e4 = abs(dirichlet_l(2, chi) - 0.9159655942)
    s = 3 + 2j
    ep = max(abs(euler_product(s, chi, 10 ** 5) - dirichlet_l(s, chi)),
             abs(euler_product(s, principal(1), 10 ** 5) - riemann_zeta(s)))
    dt = time.perf_counter() - t0
    ok = max(errs) < 1e-10 and e4 < 1e-9 and ep < 1e-5 and dt < 5
    return ok, f"zeta/L values worst {max(errs):.2e}, Catalan {e4:.2e}, Euler product {ep:.2e}", dt


def check_3():
    t0 = time.perf_counter()
    g = GlobalCharacterQ(principal(1))
    worst = 0.0
    used = 0
    for i in range(5):
        for j in range(5):
            a = complex(0.3 + 0.1 * i, 2.5 * j)
            rep = adelic.verify_gamma_adelic_Q(a, g)
            if rep.verdict == "inconclusive":
                continue
            used += 1
            worst = max(worst, rep.residual)
    spot = adelic.verify_gamma_adelic_Q(2, g)
    spot_ok = abs(spot.lhs - 1) < 1e-12 and abs(spot.rhs - 1) < 1e-12
    dt = time.perf_counter() - t0
    ok = worst < 1e-8 and spot_ok and used >= 20 and dt < 5
    return ok, f"trivial-character gamma identity on {used} grid points, worst {worst:.2e}, alpha=2 both sides 1: {spot_ok}", dt


def check_4():
    t0 = time.perf_counter()
    worst = 0.0
    bad = 0
    for d in (-1, -2, -3, -7, -11, 2, 3, 7):
        for pt in adelic.random_points(20, seed=abs(d) + 100 * (d > 0)):
            rep = adelic.verify_beta_quadratic_principal(d, pt)
            bad += not rep.passed
            worst = max(worst, rep.residual or 0.0)
    gauss = [adelic.verify_gauss_field(pt) for pt in adelic.random_points(20, seed=7)]
    gworst = max(r.residual for r in gauss)
    dt = time.perf_counter() - t0
    ok = bad == 0 and worst < 1e-8 and gworst < 1e-8 and dt < 30
    return ok, f"sqrt|D| identity, 160 points, worst {worst:.2e}; Gauss field = 2 worst {gworst:.2e}", dt


def check_5():
    t0 = time.perf_counter()
    chars = [GlobalCharacterQ(kronecker(-4)), GlobalCharacterQ(_mod5_order4())]
    mod_worst = 0.0
    for g in chars:
        for pt in adelic.random_points(20, seed=11):
            rep = adelic.verify_gamma_adelic_Q(pt.alpha, g, mode="modulus")
            mod_worst = max(mod_worst, rep.modulus_residual)
    c = adelic.calibrate_kappa_phase("inverse")
    full_worst = 0.0
    for g in chars:
        for pt in adelic.random_points(20, seed=12):
            rep = adelic.verify_gamma_adelic_Q(pt.alpha, g, phase=c)
            full_worst = max(full_worst, rep.residual / max(1.0, abs(rep.rhs)))
    dt = time.perf_counter() - t0
    ok = mod_worst < 1e-8 and full_worst < 1e-8 and dt < 10
    return ok, f"ramified gamma identity: modulus {mod_worst:.2e}, calibrated phase {c}, complex {full_worst:.2e}", dt


def check_6():
    t0 = time.perf_counter()
    from sympy import primerange

    bad = 0
    for d in IMAGINARY_ONE_CLASS:
        D = d if d % 4 == 1 else 4 * d
        for p in primerange(2, 1000):
            f = split_prime(d, p)
            k = kronecker_symbol(D, p)
            if k == -1:
                bad += f.case != SplitCase.INERT_B or f.q != p * p
                continue
            want = SplitCase.RAMIFIED_A if k == 0 else (SplitCase.SPLIT_C_PRIME, SplitCase.SPLIT_C_DOUBLE_PRIME)
            bad += f.case != want if k == 0 else f.case not in want
            # exact witnesses: every listed divisor has norm p
            bad += any(divisor_norm(d, div) != p for div in f.divisors)
    dt = time.perf_counter() - t0
    return bad == 0 and dt < 10, f"splitting of p < 1000 in the nine imaginary one-class fields, {bad} mismatches", dt


def _brute_unit(d):
    y = 1
    while True:
        for n in (-1, 1):
            x2 = d * y * y + n
            x = math.isqrt(x2)
            if x * x == x2 and x > 0:
                return x, y, n
        y += 1


def check_7():
    t0 = time.perf_counter()
    bad = []
    for d in (2, 3, 7, 11, 19):
        u = fundamental_unit(d)
        if (u.x, u.y, u.norm) != _brute_unit(d) or u.basis != "sqrt":
            bad.append(d)
    dt = time.perf_counter() - t0
    return not bad and dt < 1, f"fundamental units match minimal search (mismatches {bad})", dt


def check_8():
    """Checked with the prefactors and shift constants exactly as stated."""
    t0 = time.perf_counter()
    rng = random.Random(8)
    pts = []
    for _ in range(100):
        s, t = rng.uniform(-7, 7), rng.uniform(-7, 7)
        pts.append(amp.MandelstamPoint(s, t, -s - t))
    fails = {}
    derived_fails = 0
    for pt in pts:
        for k in (1, 2, 3, 4):
            r = amp.heterotic_factorization_check(pt, k, "stated")
            fails[f"k={k}"] = fails.get(f"k={k}", 0) + (not r.passed)
            derived_fails += not amp.heterotic_factorization_check(pt, k, "derived").passed
        for n in range(5):
            r = amp.shift_identity_check(n, pt.s, "stated")
            fails[f"S={-2 * n}"] = fails.get(f"S={-2 * n}", 0) + (not r.passed)
            derived_fails += not amp.shift_identity_check(n, pt.s, "derived").passed
        for k in (1, 3):
            r = amp.superstring_proportionality_check(pt, k, "stated")
            fails[f"prop k={k}"] = fails.get(f"prop k={k}", 0) + (not r.passed)
            derived_fails += not amp.superstring_proportionality_check(pt, k, "derived").passed
    dt = time.perf_counter() - t0
    failing = {k: v for k, v in fails.items() if v}
    ok = not failing and dt < 5
    msg = (f"stated heterotic forms; failing (of 100 points): {failing or 'none'}; "
           f"sign-corrected forms fail at {derived_fails} checks")
    return ok, msg, dt


def check_9():
    t0 = time.perf_counter()
    rng = random.Random(9)
    worst = 0.0
    for _ in range(50):
        s, t = rng.uniform(-7, 7), rng.uniform(-7, 7)
        p = amp.MandelstamPoint(s, t, -8 - s - t)
        worst = max(worst, amp.relation_v110_check(p).residual)
        v = amp.veneziano_ramified
        a = v(p, signs=(1, 0, 1))
        worst = max(worst, abs(a - v(p.permuted((0, 2, 1)), signs=(1, 1, 0))), abs(a - v(p.permuted((1, 0, 2)), signs=(0, 1, 1))))
        q = amp.MandelstamPoint(s, t, -32 - s - t)
        w = amp.virasoro_ramified
        for signs in ((1, 1, -2), (2, -1, -1), (1, 2, -3), (-4, 1, 3)):
            base = w(q, signs=signs)
            for perm in ((0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
                ps = tuple(signs[i] for i in perm)
                worst = max(worst, abs(base - w(q.permuted(perm), signs=ps)) / max(1.0, abs(base)))
    dt = time.perf_counter() - t0
    return worst < 1e-10 and dt < 1, f"V_110 shift relation and V/W permutation relations, worst {worst:.2e}", dt


def check_10():
    t0 = time.perf_counter()
    rng = random.Random(10)
    worst = 0.0
    bad = 0
    for d, total in ((2, -8), (-1, -32)):
        for _ in range(10):
            s, t = complex(rng.uniform(-7, 7), rng.uniform(-5, 5)), complex(rng.uniform(-7, 7), rng.uniform(-5, 5))
            rep = amp.amplitude_adelic_check(d, amp.MandelstamPoint.from_st(s, t, total))
            bad += not rep.passed
            worst = max(worst, rep.residual or 0.0)
    dt = time.perf_counter() - t0
    return bad == 0 and worst < 1e-8 and dt < 10, f"Veneziano over d=2, Virasoro over d=-1, worst {worst:.2e}", dt


def check_11():
    t0 = time.perf_counter()
    rng = random.Random(11)
    g = GlobalCharacterQ(kronecker(-4))
    worst = 0.0
    rhs_dev = 0.0
    for _ in range(10):
        s, t = complex(rng.uniform(-3, 3), rng.uniform(-5, 5)), complex(rng.uniform(-3, 3), rng.uniform(-5, 5))
        rep = amp.superstring_adelic_check(amp.MandelstamPoint.from_st(s, t, 0), [g, g, g], mode="modulus")
        worst = max(worst, rep.modulus_residual)
        rhs_dev = max(rhs_dev, abs(abs(rep.rhs) - 8))
    dt = time.perf_counter() - t0
    ok = worst < 1e-8 and rhs_dev < 1e-12 and dt < 5
    return ok, f"superstring adelic formula, |lhs/rhs| - 1 worst {worst:.2e}, |rhs| - 8 worst {rhs_dev:.1e}", dt


CHECKS = [check_1, check_2, check_3, check_4, check_5, check_6, check_7, check_8, check_9, check_10, check_11]


@pytest.mark.parametrize("n", range(1, 12))
def test_criterion(n, say):
    ok, msg, dt = CHECKS[n - 1]()
    say(n, ok, msg, dt)
    assert ok, msg


if __name__ == "__main__":
    total = 0
    for i, fn in enumerate(CHECKS, 1):
        ok, msg, dt = fn()
        _line(i, ok, msg, dt)
        total += ok
    print(f"{total}/{len(CHECKS)} criteria pass")
