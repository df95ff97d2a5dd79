"""Dirichlet characters and their idelic bookkeeping.

A character mod N is stored by its values on canonical generators of
(Z/N)^*: one generator per odd prime-power factor (the smallest primitive
root, lifted by CRT), -1 for a factor 4, and -1, 5 for a factor 2^a, a >= 3.
Values are kept exactly as "turns" k/n (the root of unity e^(2 pi i k/n)).

Text form (used by the CLI)::

    principal                 the trivial character mod 1
    kronecker:D               the real character of a fundamental discriminant
    mod=N;g1=k1/n1,g2=k2/n2   values on the canonical generators of (Z/N)^*

Generators in the last form are written as their residues mod N, in
canonical order (increasing prime, and -1 before 5 at the prime 2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Callable, Mapping

from sympy import factorint, n_order
from sympy.ntheory.modular import crt

from .analytic import is_fundamental_discriminant, kronecker_symbol, primes_upto
from .errors import (
    InconsistentOrder,
    NotOneClass,
    ParityViolation,
    TrivialityViolation,
    UnsupportedCharacterKind,
)
from .local import LocalCharacter, kappa_local
from .quadfield import QuadField, SplitCase, embed, fundamental_unit, make_field, split_prime

__all__ = [
    "DirichletCharacterSpec",
    "build_character",
    "principal",
    "kronecker",
    "parse_character",
    "canonical_generators",
    "conductor_and_ranks",
    "GlobalCharacterQ",
    "ExponentialAssignment",
    "ramified_exponentials",
    "QuadCharacterData",
    "validate_quad_character",
    "sigma_of",
    "kappa_global",
]


def _turn(x) -> Fraction:
    return Fraction(x) % 1


def _root(t: Fraction) -> complex:
    # exact values at the quarter turns keep real characters real
    t = t % 1
    exact = {Fraction(0): 1 + 0j, Fraction(1, 4): 1j, Fraction(1, 2): -1 + 0j, Fraction(3, 4): -1j}
    if t in exact:
        return exact[t]
    return cmath.exp(2j * math.pi * float(t))


@dataclass(frozen=True)
class _Component:
    p: int
    e: int
    gens: tuple  # generators modulo p^e
    orders: tuple

    @property
    def modulus(self) -> int:
        return self.p ** self.e


@lru_cache(maxsize=None)
def _smallest_primitive_root(m: int) -> int:
    phi = m // _prime_of(m) * (_prime_of(m) - 1)
    for g in range(2, m):
        if math.gcd(g, m) == 1 and n_order(g, m) == phi:
            return g
    raise ValueError(f"no primitive root mod {m}")


def _prime_of(m: int) -> int:
    return next(iter(factorint(m)))


@lru_cache(maxsize=None)
def _components(n: int) -> tuple[_Component, ...]:
    out = []
    for p, e in sorted(factorint(n).items()):
        m = p ** e
        if p == 2:
            if e == 1:
                out.append(_Component(2, 1, (), ()))
            elif e == 2:
                out.append(_Component(2, 2, (3,), (2,)))
            else:
                out.append(_Component(2, e, (m - 1, 5), (2, m // 4)))
        else:
            out.append(_Component(p, e, (_smallest_primitive_root(m),), (m // p * (p - 1),)))
    return tuple(out)


def _lift(n: int, comp: _Component, g: int) -> int:
    """Residue mod n that is g mod p^e and 1 mod the cofactor."""
    m = comp.modulus
    rest = n // m
    if rest == 1:
        return g % n
    return int(crt([m, rest], [g, 1])[0]) % n


@lru_cache(maxsize=None)
def canonical_generators(n: int) -> tuple[int, ...]:
    """Canonical generators of (Z/n)^* as residues mod n."""
    return tuple(_lift(n, c, g) for c in _components(n) for g in c.gens)


@lru_cache(maxsize=None)
def _generator_orders(n: int) -> tuple[int, ...]:
    return tuple(o for c in _components(n) for o in c.orders)


@lru_cache(maxsize=None)
def _dlog_tables(n: int) -> tuple[dict, ...]:
    """Per component: residue mod p^e -> exponent vector on that component's generators."""
    tables = []
    for c in _components(n):
        m = c.modulus
        table = {}
        if not c.gens:
            table[1 % m] = ()
        elif len(c.gens) == 1:
            g, o = c.gens[0], c.orders[0]
            x = 1
            for k in range(o):
                table[x] = (k,)
                x = x * g % m
        else:
            (g1, o1), (g2, o2) = zip(c.gens, c.orders)
            x1 = 1
            for k1 in range(o1):
                x = x1
                for k2 in range(o2):
                    table[x] = (k1, k2)
                    x = x * g2 % m
                x1 = x1 * g1 % m
        tables.append(table)
    return tuple(tables)


class DirichletCharacterSpec:
    """A Dirichlet character mod N given on the canonical generators."""

    def __init__(self, modulus: int, turns: tuple = (), origin: str | None = None):
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        self.modulus = int(modulus)
        gens = canonical_generators(self.modulus)
        turns = tuple(_turn(t) for t in turns) if turns else (Fraction(0),) * len(gens)
        if len(turns) != len(gens):
            raise ValueError(f"expected {len(gens)} generator values, got {len(turns)}")
        for t, o, g in zip(turns, _generator_orders(self.modulus), gens):
            if (t * o).denominator != 1:
                raise InconsistentOrder(
                    f"value e(2 pi i {t}) on generator {g} has order not dividing {o}"
                )
        self.turns = turns
        self.origin = origin

    # -- evaluation -------------------------------------------------------
    @property
    def generators(self) -> tuple[int, ...]:
        return canonical_generators(self.modulus)

    def turn(self, n: int) -> Fraction | None:
        """chi(n) as a turn, or None when gcd(n, N) > 1."""
        if math.gcd(n, self.modulus) != 1:
            return None
        return self._turn_table[n % self.modulus]

    @cached_property
    def _turn_table(self) -> dict:
        n = self.modulus
        out = {}
        comps = _components(n)
        tables = _dlog_tables(n)
        offsets = []
        i = 0
        for c in comps:
            offsets.append(i)
            i += len(c.gens)
        for r in range(n):
            if math.gcd(r, n) != 1:
                continue
            t = Fraction(0)
            for c, table, off in zip(comps, tables, offsets):
                exps = table[r % c.modulus]
                for j, k in enumerate(exps):
                    t += k * self.turns[off + j]
            out[r] = t % 1
        return out

    def value(self, n: int) -> complex:
        t = self.turn(n)
        return 0j if t is None else _root(t)

    __call__ = value

    @property
    def is_principal(self) -> bool:
        return all(t == 0 for t in self.turns)

    @property
    def parity(self) -> int:
        """0 for even, 1 for odd characters."""
        if self.modulus <= 2:
            return 0
        return 0 if self.turn(self.modulus - 1) == 0 else 1

    @property
    def order(self) -> int:
        return math.lcm(*(t.denominator for t in self.turns)) if self.turns else 1

    # -- algebra ------------------------------------------------------------
    @classmethod
    def from_turn_function(cls, modulus: int, fn: Callable[[int], Fraction]) -> "DirichletCharacterSpec":
        return cls(modulus, tuple(fn(g) for g in canonical_generators(modulus)))

    def lift(self, modulus: int) -> "DirichletCharacterSpec":
        """The induced character mod a multiple of N."""
        if modulus % self.modulus:
            raise ValueError("can only lift to a multiple of the modulus")
        return DirichletCharacterSpec.from_turn_function(modulus, lambda g: self.turn(g))

    def conj(self) -> "DirichletCharacterSpec":
        return DirichletCharacterSpec(self.modulus, tuple(-t for t in self.turns))

    def __mul__(self, other: "DirichletCharacterSpec") -> "DirichletCharacterSpec":
        n = math.lcm(self.modulus, other.modulus)
        return DirichletCharacterSpec.from_turn_function(n, lambda g: self.turn(g) + other.turn(g))

    def conductor_and_ranks(self) -> tuple[int, dict]:
        return conductor_and_ranks(self)

    @property
    def conductor(self) -> int:
        return conductor_and_ranks(self)[0]

    def primitive(self) -> "DirichletCharacterSpec":
        """The primitive character inducing this one."""
        n0, _ = conductor_and_ranks(self)
        if n0 == self.modulus:
            return self
        table = self._turn_table
        n = self.modulus

        def induced(g: int) -> Fraction:
            # any residue mod n congruent to g mod n0 and prime to n
            for r in range(g % n0, n, n0):
                if math.gcd(r, n) == 1:
                    return table[r]
            raise AssertionError("unreachable")

        out = DirichletCharacterSpec.from_turn_function(n0, induced)
        if self.origin and self.origin.startswith("kronecker"):
            out.origin = self.origin
        return out

    def local_component(self, p: int) -> LocalCharacter:
        """chi_p on Z_p^*: chi evaluated at u lifted to be 1 mod the prime-to-p part."""
        prim = self.primitive()
        n0, ranks = conductor_and_ranks(prim)
        rho = ranks.get(p, 0)
        if rho == 0:
            return LocalCharacter(p, 0)
        m = p ** rho
        rest = n0 // m

        def fn(u: int) -> complex:
            x = int(crt([m, rest], [u, 1])[0]) if rest > 1 else u
            return prim.value(x)

        return LocalCharacter.from_function(p, rho, fn)

    def local_turn(self, p: int, u: int) -> Fraction:
        """chi_p(u) as a turn, for u prime to p (chi taken primitive)."""
        prim = self.primitive()
        n0, ranks = conductor_and_ranks(prim)
        rho = ranks.get(p, 0)
        if rho == 0:
            return Fraction(0)
        m = p ** rho
        rest = n0 // m
        x = int(crt([m, rest], [u % m, 1])[0]) if rest > 1 else u % m
        return prim.turn(x)

    # -- identity -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, DirichletCharacterSpec):
            return NotImplemented
        return self.modulus == other.modulus and self.turns == other.turns

    def __hash__(self) -> int:
        return hash((self.modulus, self.turns))

    def serialize(self) -> str:
        if self.origin and self.origin.startswith("kronecker:"):
            D = int(self.origin.split(":", 1)[1])
            if kronecker(D) == self:
                return self.origin
        if self.modulus == 1:
            return "principal"
        body = ",".join(f"{g}={t.numerator}/{t.denominator}" for g, t in zip(self.generators, self.turns))
        return f"mod={self.modulus};{body}"

    __str__ = serialize

    def __repr__(self) -> str:
        return f"DirichletCharacterSpec({self.serialize()!r})"


def build_character(modulus: int, generator_values: Mapping[int, object] | list | tuple = ()) -> DirichletCharacterSpec:
    """Character mod N from values on the canonical generators.

    ``generator_values`` is either a sequence aligned with
    :func:`canonical_generators` or a mapping generator -> turn.  A mapping may
    omit generators (value 1).  Residues are matched modulo N, so -1 may be
    given for the generator N - 1.
    """
    gens = canonical_generators(modulus)
    if isinstance(generator_values, Mapping):
        vals = {int(g) % modulus: _turn(v) for g, v in generator_values.items()}
        unknown = set(vals) - set(gens)
        if unknown:
            raise ValueError(f"{sorted(unknown)} are not canonical generators mod {modulus}: {gens}")
        turns = tuple(vals.get(g, Fraction(0)) for g in gens)
    else:
        turns = tuple(_turn(v) for v in generator_values) if generator_values else ()
    return DirichletCharacterSpec(modulus, turns)


def principal(modulus: int = 1) -> DirichletCharacterSpec:
    return DirichletCharacterSpec(modulus)


@lru_cache(maxsize=128)
def kronecker(D: int) -> DirichletCharacterSpec:
    """chi_D as a character mod |D|."""
    if not is_fundamental_discriminant(D):
        raise ValueError(f"{D} is not a fundamental discriminant")
    n = abs(D)
    out = DirichletCharacterSpec.from_turn_function(
        n, lambda g: Fraction(0) if kronecker_symbol(D, g) == 1 else Fraction(1, 2)
    )
    out.origin = f"kronecker:{D}"
    return out


def parse_character(text: str) -> DirichletCharacterSpec:
    text = text.strip()
    if text == "principal":
        return principal(1)
    if text.startswith("kronecker:"):
        return kronecker(int(text.split(":", 1)[1]))
    if not text.startswith("mod="):
        raise ValueError(f"cannot parse character {text!r}")
    head, _, body = text.partition(";")
    n = int(head[4:])
    vals = {}
    for item in filter(None, body.split(",")):
        g, _, v = item.partition("=")
        vals[int(g)] = Fraction(v)
    return build_character(n, vals)


@lru_cache(maxsize=1024)
def _conductor_cached(modulus: int, turns: tuple) -> tuple[int, tuple]:
    chi = DirichletCharacterSpec(modulus, turns)
    n0 = 1
    ranks = {}
    for c in _components(modulus):
        m = c.modulus
        rest = modulus // m
        f = c.e
        # shrink the p-part while chi stays trivial on units = 1 mod p^(f-1)
        while f > 0:
            step = c.p ** (f - 1)
            trivial = True
            for u in range(1, m, step):
                if u % c.p == 0:
                    continue
                x = int(crt([m, rest], [u, 1])[0]) if rest > 1 else u
                if chi.turn(x) != 0:
                    trivial = False
                    break
            if not trivial:
                break
            f -= 1
        if f:
            ranks[c.p] = f
            n0 *= c.p ** f
    return n0, tuple(sorted(ranks.items()))


def conductor_and_ranks(chi: DirichletCharacterSpec) -> tuple[int, dict]:
    n0, ranks = _conductor_cached(chi.modulus, chi.turns)
    return n0, dict(ranks)


# ---------------------------------------------------------------------------
# Characters of the ideles of Q


@dataclass(frozen=True)
class GlobalCharacterQ:
    """theta = sgn^nu * prod_p theta_p with theta_p the local components of chi."""

    chi: DirichletCharacterSpec
    nu: int | None = None

    def __post_init__(self):
        nu = self.chi.parity if self.nu is None else int(self.nu) % 2
        object.__setattr__(self, "nu", nu)
        if (nu + self.chi.parity) % 2:
            raise ParityViolation(
                f"sgn^{nu} * chi with chi(-1) = {(-1) ** self.chi.parity} is not trivial on -1"
            )

    @property
    def primitive(self) -> DirichletCharacterSpec:
        return self.chi.primitive()


class ExponentialAssignment:
    """The unit-modulus numbers p^(i alpha_p), p^(i alpha'_p) and q^(i alpha_p).

    ``alpha(p)`` is p^(i alpha_p) at split and ramified primes and at every
    prime over Q; ``alpha_prime(p)`` is p^(i alpha'_p) at split primes;
    ``inert(p)`` is q^(i alpha_p) = p^(2 i alpha_p) at inert primes.
    """

    def __init__(self, alpha: Callable[[int], complex], alpha_prime=None, inert=None, kinds=None):
        self._alpha = alpha
        self._alpha_prime = alpha_prime
        self._inert = inert
        self._kinds = kinds

    def kind(self, p: int) -> str:
        return self._kinds(p) if self._kinds else "Q"

    def alpha(self, p: int) -> complex:
        return self._alpha(p)

    def alpha_prime(self, p: int) -> complex:
        if self._alpha_prime is None:
            raise KeyError(f"no alpha' at {p}")
        return self._alpha_prime(p)

    def inert(self, p: int) -> complex:
        if self._inert is None:
            raise KeyError(f"no inert exponential at {p}")
        return self._inert(p)

    def table(self, limit: int) -> dict:
        out = {}
        for p in primes_upto(limit):
            k = self.kind(p)
            if k == "inert":
                out[p] = {"q^(i alpha)": self.inert(p)}
            elif k == "split":
                out[p] = {"p^(i alpha)": self.alpha(p), "p^(i alpha')": self.alpha_prime(p)}
            else:
                out[p] = {"p^(i alpha)": self.alpha(p)}
        return out

    def max_modulus_defect(self, limit: int = 200) -> float:
        worst = 0.0
        for entry in self.table(limit).values():
            for v in entry.values():
                worst = max(worst, abs(abs(v) - 1))
        return worst


def _ramified_exponential_turn(chi: DirichletCharacterSpec, n: int, skip: int | None = None) -> Fraction:
    """prod over l | conductor, l != skip, of chi_l(n), as a turn."""
    _, ranks = conductor_and_ranks(chi)
    t = Fraction(0)
    for ell in ranks:
        if ell == skip:
            continue
        t += chi.local_turn(ell, n)
    return t % 1


def ramified_exponentials(g: GlobalCharacterQ) -> ExponentialAssignment:
    """p^(i alpha_p) = theta(p): chi(p) off the conductor, the product of the
    other local components at p at ramified primes (using theta_p(p) = 1)."""
    prim = g.primitive
    n0, ranks = conductor_and_ranks(prim)

    def alpha(p: int) -> complex:
        if p in ranks:
            return _root(_ramified_exponential_turn(prim, p, skip=p))
        return prim.value(p)

    return ExponentialAssignment(alpha)


def kappa_global(g: GlobalCharacterQ, exp: ExponentialAssignment | None = None) -> complex:
    """prod over ramified p of kappa(theta_p) * (p^(i alpha_p))^(-rho_p)."""
    exp = exp or ramified_exponentials(g)
    prim = g.primitive
    _, ranks = conductor_and_ranks(prim)
    out = 1 + 0j
    for p, rho in ranks.items():
        out *= kappa_local(prim.local_component(p)) * exp.alpha(p) ** (-rho)
    return out


def sigma_of(theta: DirichletCharacterSpec, pi: DirichletCharacterSpec) -> DirichletCharacterSpec:
    """sigma with theta * pi * sigma = 1, made primitive."""
    return (theta * pi).conj().primitive()


# ---------------------------------------------------------------------------
# Characters of the ideles of a quadratic field


@dataclass
class QuadCharacterData:
    """Character data over a one-class quadratic field.

    ``kind`` is ``'principal'``, ``'norm_induced'`` (theta = chi o Norm) or
    ``'explicit'``.  For the explicit kind, ``unit_values`` maps ``'-1'``,
    ``'i'``, ``'e^(i pi/3)'`` and ``'Omega'`` to theta of that unit, and
    ``divisor_values`` maps ``(p, 0)`` / ``(p, 1)`` to theta of the first /
    second prime divisor above p (``(p, 0)`` alone for inert and ramified p).
    """

    field: QuadField
    kind: str = "principal"
    chi: DirichletCharacterSpec | None = None
    nu: int = 0
    nu_prime: int = 0
    a: float = 0.0
    unit_values: dict = field(default_factory=dict)
    divisor_values: dict = field(default_factory=dict)

    def __post_init__(self):
        if isinstance(self.field, int):
            self.field = make_field(self.field)
        if self.kind not in ("principal", "norm_induced", "explicit"):
            raise UnsupportedCharacterKind(self.kind)
        if self.kind == "norm_induced":
            if self.chi is None:
                raise ValueError("norm_induced data needs chi")
            # the archimedean component of chi o N
            par = self.chi.parity
            if self.field.d < 0:
                self.nu = 0
            else:
                self.nu = self.nu_prime = par
            self.a = 0.0


def _theta_norm_induced(chi: DirichletCharacterSpec, norm: int, skip: int | None = None) -> complex:
    # prod over l in R, l != skip, of chi_l(|norm|); the sign of the norm is
    # absorbed by the archimedean component (chi(-1) = (-1)^nu)
    return _root(_ramified_exponential_turn(chi.primitive(), abs(norm), skip=skip))


def _theta_unit_norm_induced(qc: QuadCharacterData, norm: int) -> complex:
    # finite part only: prod_l chi_l(N eps) = chi(N eps) for N eps = +-1
    chi = qc.chi.primitive()
    return chi.value(norm % chi.modulus) if chi.modulus > 1 else 1 + 0j


def validate_quad_character(qc: QuadCharacterData, strict: bool = True) -> ExponentialAssignment:
    """Check the unit conditions and return the exponentials at every prime.

    ``strict=False`` skips the one-class check.
    """
    fld = qc.field
    d = fld.d
    if strict and not fld.one_class:
        raise NotOneClass(f"Q(sqrt {d}) is not in the one-class list")
    h = 1 if d > 0 else 0

    if qc.kind == "principal":
        def theta_unit(label):
            return 1 + 0j

        def theta_div(p, idx, fact):
            return 1 + 0j
    elif qc.kind == "norm_induced":
        norms = {"-1": 1, "i": 1, "e^(i pi/3)": 1}
        if d > 0:
            norms["Omega"] = fundamental_unit(d).norm

        def theta_unit(label):
            return _theta_unit_norm_induced(qc, norms[label])

        def theta_div(p, idx, fact):
            return _theta_norm_induced(qc.chi, fact.q, skip=p)
    else:
        def theta_unit(label):
            if label not in qc.unit_values:
                raise TrivialityViolation(f"explicit data lacks theta({label})")
            return complex(qc.unit_values[label])

        def theta_div(p, idx, fact):
            key = (p, idx)
            if key not in qc.divisor_values:
                raise KeyError(f"explicit data lacks theta of divisor {key}")
            return complex(qc.divisor_values[key])

    # archimedean part on -1: d < 0: (-1)^nu; d > 0: sgn^nu(-1) sgn^nu'(-1)
    def arch(label: str) -> complex:
        if d < 0:
            val = {"-1": -1, "i": 1j, "e^(i pi/3)": cmath.exp(1j * math.pi / 3)}[label]
            return val ** qc.nu
        if label == "-1":
            return (-1) ** ((qc.nu + qc.nu_prime) % 2)
        unit = fundamental_unit(d)
        conj_sign = 1 if unit.norm > 0 else -1
        return conj_sign ** (qc.nu_prime % 2)

    checks = [("-1", 1 + 0j)]
    if d == -1:
        checks.append(("i", 1 + 0j))
    if d == -3:
        checks.append(("e^(i pi/3)", 1 + 0j))
    if d > 0:
        omega = fundamental_unit(d).value.real
        checks.append(("Omega", cmath.exp(-1j * qc.a * math.log(omega))))
    for label, want in checks:
        if qc.kind == "explicit":
            got = theta_unit(label)
        else:
            got = theta_unit(label) * arch(label) if qc.kind == "norm_induced" else theta_unit(label)
        if abs(got - want) > 1e-9:
            raise TrivialityViolation(f"theta({label}) = {got}, required {want}")

    def absval(div) -> float:
        return abs(embed(d, div).real) if d > 0 else 1.0

    def twist(div) -> complex:
        if not h:
            return 1 + 0j
        return cmath.exp(1j * qc.a * math.log(absval(div)))

    @lru_cache(maxsize=None)
    def fact_of(p: int):
        return split_prime(fld, p, strict=strict)

    def kinds(p: int) -> str:
        c = fact_of(p).case
        if c == SplitCase.INERT_B:
            return "inert"
        if c == SplitCase.RAMIFIED_A:
            return "ramified"
        return "split"

    def alpha(p: int) -> complex:
        f = fact_of(p)
        if f.case == SplitCase.INERT_B:
            raise KeyError(f"{p} is inert; use inert()")
        return theta_div(p, 0, f) * twist(f.divisors[0])

    def alpha_prime(p: int) -> complex:
        f = fact_of(p)
        if f.case not in (SplitCase.SPLIT_C_PRIME, SplitCase.SPLIT_C_DOUBLE_PRIME):
            raise KeyError(f"{p} does not split")
        return theta_div(p, 1, f) * twist(f.divisors[1])

    def inert(p: int) -> complex:
        f = fact_of(p)
        if f.case != SplitCase.INERT_B:
            raise KeyError(f"{p} is not inert")
        val = theta_div(p, 0, f)
        if h:
            val *= cmath.exp(1j * qc.a * math.log(p))
        return val

    return ExponentialAssignment(alpha, alpha_prime, inert, kinds)
