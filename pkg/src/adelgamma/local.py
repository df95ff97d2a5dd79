"""Local gamma and beta functions of R, C and the p-adic fields.

All closed forms are evaluated directly; removable singularities are never
limit-evaluated, a point within ``policy.pole_guard`` of a pole is rejected.
The reduced p-adic gamma function additionally has an exact mode: feed it a
:class:`fractions.Fraction` (or an integer exponent to :func:`gamma_q`) and it
returns a Fraction.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Callable, Mapping

from sympy import isprime

from .analytic import DEFAULT_POLICY, PrecisionPolicy, log_gamma
from .errors import (
    ConstraintViolation,
    NonFiniteResult,
    PoleAtNonPositiveInteger,
    PoleError,
    PoleGuardError,
)

__all__ = [
    "RealGammaArgs",
    "ComplexGammaArgs",
    "PAdicPlace",
    "LocalCharacter",
    "gamma_real",
    "gamma_complex",
    "reduced_gamma",
    "gamma_q",
    "kappa_local",
    "local_gamma_ramified",
    "beta_real",
    "beta_complex",
    "beta_padic",
    "beta_primed",
]

_SUM_TOL = 1e-12


@dataclass(frozen=True)
class RealGammaArgs:
    """Quasicharacter sgn(x)^nu |x|^alpha of R; nu lives in F_2."""

    alpha: complex
    nu: int = 0

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "nu", int(self.nu) % 2)


@dataclass(frozen=True)
class ComplexGammaArgs:
    """Quasicharacter z^nu (z zbar)^(alpha - nu/2) of C; nu is any integer."""

    alpha: complex
    nu: int = 0

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        if int(self.nu) != self.nu:
            raise ValueError("nu must be an integer")
        object.__setattr__(self, "nu", int(self.nu))


@dataclass(frozen=True)
class PAdicPlace:
    p: int
    f: int = 1

    def __post_init__(self):
        if not isprime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.f not in (1, 2):
            raise ValueError("residue degree must be 1 or 2")

    @property
    def q(self) -> int:
        return self.p ** self.f


def _guard_gamma(z: complex, policy: PrecisionPolicy) -> None:
    # reject z within pole_guard of a non-positive integer
    n = round(z.real)
    if n <= 0:
        dist = abs(z - n)
        if dist == 0:
            raise PoleAtNonPositiveInteger(f"gamma pole at {n}")
        if dist < policy.pole_guard:
            raise PoleGuardError(f"{z} lies within {policy.pole_guard:g} of the gamma pole {n}")


def _i_pow(k: int) -> complex:
    return (1, -1j, -1, 1j)[k % 4]  # i^(-k)


def _as_args(obj, cls):
    if isinstance(obj, cls):
        return obj
    if isinstance(obj, (tuple, list)):
        return cls(*obj)
    return cls(obj)


# ---------------------------------------------------------------------------
# Archimedean places


def gamma_real(alpha, nu: int = 0, policy: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """Gamma_inf(alpha; nu) = 2 i^-nu (2 pi)^-alpha Gamma(alpha) cos(pi (alpha - nu)/2)."""
    alpha = complex(alpha)
    nu = int(nu) % 2
    n = round(alpha.real)
    if n <= 0 and (n + nu) % 2 and abs(alpha - n) < 0.25:
        # the pole of Gamma(alpha) cancels the zero of the cosine; reflect
        return (-1) ** nu / gamma_real(1 - alpha, nu, policy)
    _guard_gamma(alpha, policy)
    # work with logs so that large |Im alpha| does not overflow an intermediate
    lg = log_gamma(alpha) - alpha * math.log(2 * math.pi)
    c = cmath.cos(math.pi * (alpha - nu) / 2)
    if c == 0:
        return 0j
    try:
        out = 2 * _i_pow(nu) * cmath.exp(lg + cmath.log(c))
    except OverflowError as exc:
        raise NonFiniteResult(f"gamma_real({alpha}, {nu}) overflows") from exc
    if alpha.imag == 0.0:
        # real alpha: the value is real (nu = 0) or purely imaginary (nu = 1)
        out = complex(out.real, 0.0) if nu == 0 else complex(0.0, out.imag)
    return out


def gamma_complex(alpha, nu: int = 0, policy: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """Gamma_omega(alpha; nu) = i^-nu 2 (2 pi)^(-2 alpha) Gamma(alpha + nu/2) Gamma(alpha - nu/2) sin(pi (2 alpha - nu)/2)."""
    alpha = complex(alpha)
    if int(nu) != nu:
        raise ValueError("nu must be an integer")
    nu = int(nu)
    _guard_gamma(alpha + nu / 2, policy)
    _guard_gamma(alpha - nu / 2, policy)
    lg = (
        log_gamma(alpha + nu / 2)
        + log_gamma(alpha - nu / 2)
        - 2 * alpha * math.log(2 * math.pi)
    )
    s = cmath.sin(math.pi * (2 * alpha - nu) / 2)
    if s == 0:
        return 0j
    try:
        out = 2 * _i_pow(nu) * cmath.exp(lg + cmath.log(s))
    except OverflowError as exc:
        raise NonFiniteResult(f"gamma_complex({alpha}, {nu}) overflows") from exc
    if alpha.imag == 0.0:
        out = complex(out.real, 0.0) if nu % 2 == 0 else complex(0.0, out.imag)
    return out


# ---------------------------------------------------------------------------
# Non-archimedean places, unramified


def reduced_gamma(x, q: int, policy: PrecisionPolicy = DEFAULT_POLICY):
    """G_q(x) = (1 - x/q) / (1 - 1/x).

    Rational input (int or Fraction) gives an exact Fraction.  The pole at
    x = 1 is rejected, as is x = 0.
    """
    if isinstance(x, Rational):
        x = Fraction(x)
        if x == 0 or x == 1:
            raise PoleError(f"G_{q} has a pole at x = {x}")
        return (1 - x / q) / (1 - 1 / x)
    x = complex(x)
    if x == 0:
        raise PoleError("G_q is undefined at x = 0")
    den = 1 - 1 / x
    if den == 0:
        raise PoleError(f"G_{q} has a pole at x = 1")
    if abs(den) < policy.pole_guard:
        raise PoleGuardError(f"|1 - 1/x| = {abs(den):.3g} is below the pole guard")
    return (1 - x / q) / den


def _q_power(q: int, alpha):
    if isinstance(alpha, Rational) and Fraction(alpha).denominator == 1:
        return Fraction(q) ** int(alpha)
    return cmath.exp(complex(alpha) * math.log(q))


def gamma_q(alpha, q: int, policy: PrecisionPolicy = DEFAULT_POLICY):
    """Gamma_q(alpha) = G_q(q^alpha) with the principal branch of q^alpha."""
    return reduced_gamma(_q_power(q, alpha), q, policy)


# ---------------------------------------------------------------------------
# Ramified local characters


@dataclass(frozen=True)
class LocalCharacter:
    """A primitive character of Z_p^* of rank rho, given on units mod p^rho.

    ``values`` maps each residue u mod p^rho prime to p to a root of unity.
    ``r`` is the rank of the additive character (0 for Q_p).
    """

    p: int
    rank: int
    values: Mapping[int, complex] = field(default_factory=dict)
    r: int = 0

    def __post_init__(self):
        if not isprime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.rank < 0 or self.r < 0:
            raise ValueError("ranks must be non-negative")
        vals = {int(u) % self.modulus: complex(v) for u, v in self.values.items()}
        object.__setattr__(self, "values", vals)
        if self.rank == 0:
            if vals and any(abs(v - 1) > 1e-12 for v in vals.values()):
                raise ValueError("a rank-0 character is trivial")
            return
        units = [u for u in range(1, self.modulus) if u % self.p]
        if set(vals) != set(units):
            raise ValueError("values must be given on every unit mod p^rank")
        for u in units:
            if abs(abs(vals[u]) - 1) > 1e-12:
                raise ValueError("character values must be roots of unity")
            for v in units[: min(len(units), 12)]:
                if abs(vals[u * v % self.modulus] - vals[u] * vals[v]) > 1e-9:
                    raise ValueError("values are not multiplicative")
        # primitivity: non-trivial on 1 + p^(rank-1) Z_p (for rank 1: non-trivial)
        step = self.p ** (self.rank - 1)
        kernel = [u for u in units if (u - 1) % step == 0]
        if all(abs(vals[u] - 1) < 1e-9 for u in kernel):
            raise ValueError("character is not primitive at the stated rank")

    @property
    def modulus(self) -> int:
        return self.p ** self.rank

    def __call__(self, u: int) -> complex:
        if u % self.p == 0:
            return 0j
        if self.rank == 0:
            return 1 + 0j
        return self.values[u % self.modulus]

    @classmethod
    def from_function(cls, p: int, rank: int, fn: Callable[[int], complex], r: int = 0):
        m = p ** rank
        return cls(p, rank, {u: fn(u) for u in range(1, m) if u % p}, r)


def kappa_local(chi: LocalCharacter) -> complex:
    """kappa(theta) = q^(rho/2) * integral over |x| = 1 of theta(x) e(x / p^(r+rho)) dx.

    Haar measure gives Z_p volume 1, so the integral is the finite sum over
    units mod p^(rho+r), each coset having volume p^-(rho+r).
    """
    if chi.rank < 1:
        raise ValueError("kappa is only defined for ramified characters (rank >= 1)")
    m = chi.p ** (chi.rank + chi.r)
    total = 0j
    for u in range(1, m):
        if u % chi.p:
            total += chi(u) * cmath.exp(2j * math.pi * u / m)
    return chi.p ** (chi.rank / 2) * total / m


def local_gamma_ramified(alpha, chi: LocalCharacter, q: int | None = None) -> complex:
    """kappa(theta) q^((alpha - 1/2)(r + rho)); q defaults to p."""
    if chi.rank < 1:
        raise ValueError("unramified character: use gamma_q instead")
    q = chi.p if q is None else q
    alpha = complex(alpha)
    return kappa_local(chi) * cmath.exp((alpha - 0.5) * (chi.r + chi.rank) * math.log(q))


# ---------------------------------------------------------------------------
# Beta functions


def _check_sum(total: complex, expected: float, what: str) -> None:
    if abs(total - expected) > _SUM_TOL:
        raise ConstraintViolation(f"{what}: arguments sum to {total}, expected {expected}")


def beta_real(a, b, c, policy: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """B_inf = Gamma_inf(a) Gamma_inf(b) Gamma_inf(c) with alpha+beta+gamma=1, nu+mu+eta=0 in F_2."""
    a, b, c = (_as_args(x, RealGammaArgs) for x in (a, b, c))
    _check_sum(a.alpha + b.alpha + c.alpha, 1.0, "beta_real")
    if (a.nu + b.nu + c.nu) % 2:
        raise ConstraintViolation("beta_real: nu + mu + eta must vanish in F_2")
    return (
        gamma_real(a.alpha, a.nu, policy)
        * gamma_real(b.alpha, b.nu, policy)
        * gamma_real(c.alpha, c.nu, policy)
    )


def beta_complex(a, b, c, policy: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """B_omega = product of three Gamma_omega with alpha+beta+gamma=1, nu+mu+eta=0 in Z."""
    a, b, c = (_as_args(x, ComplexGammaArgs) for x in (a, b, c))
    _check_sum(a.alpha + b.alpha + c.alpha, 1.0, "beta_complex")
    if a.nu + b.nu + c.nu != 0:
        raise ConstraintViolation("beta_complex: nu + mu + eta must vanish")
    return (
        gamma_complex(a.alpha, a.nu, policy)
        * gamma_complex(b.alpha, b.nu, policy)
        * gamma_complex(c.alpha, c.nu, policy)
    )


def beta_padic(alpha, beta, gamma_, q: int, policy: PrecisionPolicy = DEFAULT_POLICY):
    """B_q = Gamma_q(alpha) Gamma_q(beta) Gamma_q(gamma); exact for integer arguments."""
    exact = all(isinstance(x, Rational) for x in (alpha, beta, gamma_))
    total = Fraction(alpha) + Fraction(beta) + Fraction(gamma_) if exact else complex(alpha) + complex(beta) + complex(gamma_)
    if exact:
        if total != 1:
            raise ConstraintViolation(f"beta_padic: arguments sum to {total}, expected 1")
    else:
        _check_sum(total, 1.0, "beta_padic")
    return gamma_q(alpha, q, policy) * gamma_q(beta, q, policy) * gamma_q(gamma_, q, policy)


def beta_primed(a, b, c, policy: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """B'_inf: three Gamma_inf with alpha+beta+gamma=0 and nu+mu+eta=1 in F_2."""
    a, b, c = (_as_args(x, RealGammaArgs) for x in (a, b, c))
    _check_sum(a.alpha + b.alpha + c.alpha, 0.0, "beta_primed")
    if (a.nu + b.nu + c.nu) % 2 != 1:
        raise ConstraintViolation("beta_primed: nu + mu + eta must equal 1 in F_2")
    return (
        gamma_real(a.alpha, a.nu, policy)
        * gamma_real(b.alpha, b.nu, policy)
        * gamma_real(c.alpha, c.nu, policy)
    )
