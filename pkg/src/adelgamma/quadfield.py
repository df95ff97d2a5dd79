"""Arithmetic of quadratic fields Q(sqrt d): discriminant, splitting of rational
primes into prime divisors, divisor normalization and units.

Divisor coordinates
-------------------
For D = 4d a divisor ``(a, b)`` means a + b*sqrt(d).  For D = d (d = 1 mod 4) it
means a + b*w with w = (1 + sqrt d)/2, so that a + b/2 + (b/2) sqrt d; the
conjugate is then ``(a + b, -b)``.  :func:`half_coords` converts to the
``(x, y)`` form (x + y sqrt d)/2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from sympy import factorint, isprime

from .analytic import kronecker_symbol
from .errors import NotOneClass, NotSquarefree, SolverExhausted

__all__ = [
    "QuadField",
    "SplitCase",
    "PrimeDivisorFactorization",
    "FundamentalUnit",
    "TorsionUnit",
    "make_field",
    "is_one_class",
    "classify_place",
    "split_prime",
    "normalize_divisors",
    "fundamental_unit",
    "torsion_units",
    "half_coords",
    "divisor_norm",
    "embed",
]

IMAGINARY_ONE_CLASS = (-1, -2, -3, -7, -11, -19, -43, -67, -163)


def _check_d(d: int) -> None:
    if d in (0, 1):
        raise NotSquarefree(f"d = {d} does not define a quadratic field")
    if any(e > 1 for e in factorint(abs(d)).values()):
        raise NotSquarefree(f"d = {d} is not squarefree")


def is_one_class(d: int) -> bool:
    """The one-class predicate, following the classical list and real patterns literally.

    Imaginary: the nine Heegner values.  Real: d = p, d = 2p or d = p p' with
    p, p' primes congruent to 3 mod 4.  The real patterns are reproduced as
    stated; they are not a class-number computation (d = 2 and d = 5 are
    excluded even though their class number is one, and some matches such as
    d = 79 have class number greater than one).
    """
    _check_d(d)
    if d < 0:
        return d in IMAGINARY_ONE_CLASS
    fac = factorint(d)
    primes = sorted(fac)
    odd = [p for p in primes if p != 2]
    if not odd or any(p % 4 != 3 for p in odd):
        return False
    if len(primes) == 1:
        return True
    if len(primes) == 2:
        return primes[0] == 2 or len(odd) == 2
    return False


@dataclass(frozen=True)
class FundamentalUnit:
    """Omega = x + y*sqrt(d) (``basis == 'sqrt'``) or x + y*w (``basis == 'omega'``)."""

    d: int
    x: int
    y: int
    norm: int
    basis: str

    @property
    def value(self) -> float:
        return embed(self.d, (self.x, self.y), self.basis)

    def __str__(self) -> str:
        gen = "sqrt(%d)" % self.d if self.basis == "sqrt" else "(1+sqrt(%d))/2" % self.d
        return f"{self.x} + {self.y}*{gen}"


@dataclass(frozen=True)
class QuadField:
    d: int
    D: int
    one_class: bool
    ramified_ranks: dict = field(hash=False, compare=False)

    @property
    def basis(self) -> str:
        return "omega" if self.D == self.d else "sqrt"

    @property
    def unit(self) -> "FundamentalUnit | None":
        return fundamental_unit(self.d) if self.d > 0 else None


@lru_cache(maxsize=256)
def make_field(d: int) -> QuadField:
    _check_d(d)
    D = d if d % 4 == 1 else 4 * d
    ranks = {p: e for p, e in factorint(abs(D)).items()}
    return QuadField(d, D, is_one_class(d), ranks)


def classify_place(d: int, p: int) -> str:
    """'P' if d is a square in Q_p^*, else 'S'."""
    if d % p == 0:
        return "S"
    if p == 2:
        return "P" if d % 8 == 1 else "S"
    return "P" if pow(d % p, (p - 1) // 2, p) == 1 else "S"


class SplitCase(str, Enum):
    RAMIFIED_A = "RamifiedA"
    INERT_B = "InertB"
    SPLIT_C_PRIME = "SplitCPrime"
    SPLIT_C_DOUBLE_PRIME = "SplitCDoublePrime"


@dataclass(frozen=True)
class PrimeDivisorFactorization:
    d: int
    p: int
    case: SplitCase
    q: int
    divisors: tuple | None = None
    hensel_root: int | None = None

    @property
    def basis(self) -> str:
        return "omega" if self.d % 4 == 1 else "sqrt"

    def as_dict(self) -> dict:
        out = {"d": self.d, "p": self.p, "case": self.case.value, "q": self.q, "basis": self.basis}
        out["divisors"] = [list(x) for x in self.divisors] if self.divisors else None
        out["hensel_root"] = self.hensel_root
        return out


def _conj(d: int, div: tuple[int, int]) -> tuple[int, int]:
    a, b = div
    return (a + b, -b) if d % 4 == 1 else (a, -b)


def divisor_norm(d: int, div: tuple[int, int]) -> int:
    """Exact norm of the element with coordinates ``div``."""
    a, b = div
    if d % 4 == 1:
        return a * a + a * b + (1 - d) // 4 * b * b
    return a * a - d * b * b


def half_coords(d: int, div: tuple[int, int]) -> tuple[int, int]:
    """(a, b) -> (x, y) with element = (x + y sqrt d)/2."""
    a, b = div
    if d % 4 == 1:
        return (2 * a + b, b)
    return (2 * a, 2 * b)


def embed(d: int, div: tuple[int, int], basis: str | None = None) -> complex:
    """Value of the element under the embedding sqrt(d) -> positive root (or i*sqrt|d|)."""
    a, b = div
    root = math.sqrt(d) if d > 0 else cmath.sqrt(d)
    if (basis or ("omega" if d % 4 == 1 else "sqrt")) == "omega":
        return a + b * (1 + root) / 2
    return a + b * root


# ---------------------------------------------------------------------------
# Diophantine search


def _pell_unit_sqrt(d: int) -> tuple[int, int]:
    """Fundamental solution of x^2 - d y^2 = 1 (d > 0)."""
    x, y = _first_unit_convergent(d, 0, 1, (1,))
    if x * x - d * y * y == -1:
        x, y = x * x + d * y * y, 2 * x * y
    return x, y


def _search_bound(d: int, n: int) -> int:
    """Upper bound on |y| of a fundamental solution of x^2 - d y^2 = n (Nagell)."""
    if d < 0:
        return math.isqrt(abs(n) // abs(d)) + 1
    x1, y1 = _pell_unit_sqrt(d)
    if n > 0:
        bound = y1 * math.sqrt(n) / math.sqrt(2 * (x1 + 1))
    else:
        bound = y1 * math.sqrt(-n) / math.sqrt(2 * (x1 - 1))
    return int(bound) + 2


def _solve_norm(d: int, p: int) -> tuple[int, int]:
    """An element of norm +-p in the maximal order, in stored coordinates."""
    omega = d % 4 == 1
    scale = 4 if omega else 1
    bound = math.ceil(math.sqrt(p * (1 + abs(d)))) + 1
    for n in (p, -p):
        if d < 0 and n < 0:
            continue
        bound = max(bound, _search_bound(d, scale * n))
    for y in range(1, bound + 1):
        for n in (p, -p):
            if omega:
                # (2x + y)^2 - d y^2 = 4n
                disc = d * y * y + 4 * n
                if disc < 0:
                    continue
                s = math.isqrt(disc)
                if s * s != disc:
                    continue
                roots = [(r - y) // 2 for r in (s, -s) if (r - y) % 2 == 0]
            else:
                disc = d * y * y + n
                if disc < 0:
                    continue
                s = math.isqrt(disc)
                if s * s != disc:
                    continue
                roots = [s]
            nonneg = sorted(r for r in roots if r >= 0)
            if nonneg:
                return (nonneg[0], y)
            if roots:
                x = max(roots)
                return (-x, -y)
    raise SolverExhausted(f"no element of norm +-{p} in Q(sqrt {d}) with |y| <= {bound}")


def _hensel_root(d: int, p: int) -> int:
    if d % 4 == 1:
        c = (d - 1) // 4
        return next(r for r in range(1, p) if (r * r - r - c) % p == 0)
    return next(r for r in range(1, p) if (r * r - d) % p == 0)


def normalize_divisors(fact: PrimeDivisorFactorization, d: int | None = None) -> PrimeDivisorFactorization:
    """Order (p, pbar) so that p divides the first divisor evaluated at the Hensel root."""
    if fact.case not in (SplitCase.SPLIT_C_PRIME, SplitCase.SPLIT_C_DOUBLE_PRIME):
        return fact
    d = fact.d if d is None else d
    p = fact.p
    r = _hensel_root(d, p)
    first, second = fact.divisors
    a, b = first
    if (a + b * r) % p != 0:
        first, second = second, first
    a, b = first
    assert (a + b * r) % p == 0, "neither divisor is divisible by p at the Hensel root"
    return PrimeDivisorFactorization(fact.d, p, fact.case, fact.q, (first, second), r)


def split_prime(fld: QuadField | int, p: int, strict: bool = True) -> PrimeDivisorFactorization:
    """Prime divisors above p.  ``strict=False`` skips the one-class check."""
    if not isinstance(fld, QuadField):
        fld = make_field(fld)
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if strict and not fld.one_class:
        raise NotOneClass(f"Q(sqrt {fld.d}) is not in the one-class list")
    d = fld.d
    if fld.D % p == 0:
        div = _solve_norm(d, p)
        return PrimeDivisorFactorization(d, p, SplitCase.RAMIFIED_A, p, (div, _conj(d, div)))
    if classify_place(d, p) == "S":
        return PrimeDivisorFactorization(d, p, SplitCase.INERT_B, p * p)
    case = SplitCase.SPLIT_C_DOUBLE_PRIME if d % 4 == 1 else SplitCase.SPLIT_C_PRIME
    div = _solve_norm(d, p)
    fact = PrimeDivisorFactorization(d, p, case, p, (div, _conj(d, div)))
    return normalize_divisors(fact)


# ---------------------------------------------------------------------------
# Units


def _first_unit_convergent(d: int, P: int, Q: int, norms) -> tuple[int, int]:
    # continued fraction of (P + sqrt d)/Q, returning the first convergent h/k
    # with |N(h + k * xi)| = 1 for the relevant norm form
    s = math.isqrt(d)
    h1, h2 = 1, 0  # h_{n-1}, h_{n-2}
    k1, k2 = 0, 1
    omega = Q == 2
    for _ in range(10_000):
        a = (P + s) // Q
        h1, h2 = a * h1 + h2, h1
        k1, k2 = a * k1 + k2, k1
        x, y = h1, k1
        n = x * x + x * y + (1 - d) // 4 * y * y if omega else x * x - d * y * y
        if abs(n) in norms:
            return x, y
        P = a * Q - P
        Q = (d - P * P) // Q
    raise SolverExhausted(f"continued fraction of sqrt {d} did not produce a unit")


@lru_cache(maxsize=256)
def fundamental_unit(d: int) -> FundamentalUnit:
    """Smallest unit Omega > 1 of the maximal order of Q(sqrt d), d > 0."""
    _check_d(d)
    if d < 0:
        raise ValueError("fundamental units exist only for d > 0")
    if d % 4 == 1:
        # units x + y w have x/y close to w - 1 = (-1 + sqrt d)/2
        x, y = _first_unit_convergent(d, -1, 2, (1,))
        n = x * x + x * y + (1 - d) // 4 * y * y
        return FundamentalUnit(d, x, y, n, "omega")
    x, y = _first_unit_convergent(d, 0, 1, (1,))
    return FundamentalUnit(d, x, y, x * x - d * y * y, "sqrt")


@dataclass(frozen=True)
class TorsionUnit:
    label: str
    value: complex


def torsion_units(d: int) -> list[TorsionUnit]:
    """Roots of unity in Q(sqrt d)."""
    _check_d(d)
    out = [TorsionUnit("1", 1 + 0j), TorsionUnit("-1", -1 + 0j)]
    if d == -1:
        out += [TorsionUnit("i", 1j), TorsionUnit("-i", -1j)]
    elif d == -3:
        for k in (1, 2, 4, 5):
            sign = "" if k in (1, 5) else "-"
            pm = "+" if k in (1, 4) else "-"
            label = f"{sign}(1{pm}sqrt(-3))/2"
            out.append(TorsionUnit(label, cmath.exp(1j * math.pi * k / 3)))
    return out


def splitting_matches_kronecker(d: int, p: int) -> bool:
    """Consistency hook: split/inert/ramified agrees with the Kronecker symbol."""
    fld = make_field(d)
    k = kronecker_symbol(fld.D, p)
    case = split_prime(fld, p, strict=False).case
    if k == 0:
        return case == SplitCase.RAMIFIED_A
    if k == -1:
        return case == SplitCase.INERT_B
    return case in (SplitCase.SPLIT_C_PRIME, SplitCase.SPLIT_C_DOUBLE_PRIME)
