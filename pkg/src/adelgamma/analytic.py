"""Classical analytic functions behind the regularized Euler products.

Everything runs in double-precision complex arithmetic.  The Hurwitz zeta
function is evaluated by Euler-Maclaurin summation; Dirichlet L-series and the
Dedekind zeta function of a quadratic field are assembled from it.  Each
evaluation carries an a-posteriori error estimate and fails loudly
(:class:`AccuracyNotReachable`) instead of returning a degraded value.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass, fields
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Protocol

from sympy import factorint, primerange

from .errors import (
    AccuracyNotReachable,
    NonFiniteResult,
    PoleAtNonPositiveInteger,
    PoleAtOne,
)

__all__ = [
    "PrecisionPolicy",
    "DEFAULT_POLICY",
    "BERNOULLI",
    "log_gamma",
    "gamma",
    "hurwitz_zeta",
    "riemann_zeta",
    "dirichlet_l",
    "dedekind_zeta_quadratic",
    "kronecker_symbol",
    "KroneckerCharacter",
    "is_fundamental_discriminant",
    "euler_product",
    "primes_upto",
]

_EPS = sys.float_info.epsilon
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_STIRLING_MIN = 15.0
_MAX_SERIES_TERMS = 1 << 13
_MAX_REFLECT_DENOMINATOR = 1000

# Declared accuracy window: |Re s| <= 10, |Im s| <= 30.
WINDOW_RE = 10.0
WINDOW_IM = 30.0


def _bernoulli_numbers(n_max: int) -> list[Fraction]:
    # Akiyama-Tanigawa; only even indices are ever used, so the B_1 sign is moot
    out = []
    row = [Fraction(0)] * (n_max + 1)
    for m in range(n_max + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    return out


#: Exact Bernoulli numbers B_0 .. B_32.
BERNOULLI: tuple[Fraction, ...] = tuple(_bernoulli_numbers(32))

# B_{2k}/(2k)! for the Euler-Maclaurin tail, k = 0..16
_EM_COEF = [float(BERNOULLI[2 * k] / math.factorial(2 * k)) for k in range(17)]
# B_{2k}/(2k(2k-1)) for the Stirling series, k = 1..16
_STIRLING_COEF = [0.0] + [
    float(BERNOULLI[2 * k] / (2 * k * (2 * k - 1))) for k in range(1, 17)
]


@dataclass(frozen=True)
class PrecisionPolicy:
    """Numerical knobs shared by all analytic evaluations.

    ``series_terms`` is the number of explicitly summed terms M of the
    Euler-Maclaurin formula, ``bernoulli_terms`` the number K of Bernoulli
    corrections.  ``target_abs_err`` is the error budget of one evaluation,
    measured against ``max(1, |value|)``.  ``pole_guard`` is the smallest
    denominator magnitude (or distance to a gamma pole) accepted by the
    verifiers before a test point is declared inconclusive.
    """

    series_terms: int = 50
    bernoulli_terms: int = 10
    target_abs_err: float = 1e-12
    pole_guard: float = 1e-6

    def __post_init__(self) -> None:
        if int(self.series_terms) != self.series_terms or self.series_terms < 10:
            raise ValueError("series_terms must be an integer >= 10")
        if int(self.bernoulli_terms) != self.bernoulli_terms or not (
            2 <= self.bernoulli_terms <= 15
        ):
            raise ValueError("bernoulli_terms must be an integer in [2, 15]")
        if not (0.0 < self.target_abs_err <= 1e-6):
            raise ValueError("target_abs_err must lie in (0, 1e-6]")
        if not self.pole_guard > 0.0:
            raise ValueError("pole_guard must be positive")

    @classmethod
    def from_mapping(cls, data: Mapping[str, object]) -> "PrecisionPolicy":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown policy keys: {sorted(unknown)}")
        kwargs = {}
        for f in fields(cls):
            if f.name in data:
                cast = int if f.type == "int" else float
                kwargs[f.name] = cast(data[f.name])  # type: ignore[arg-type]
        return cls(**kwargs)

    def as_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


DEFAULT_POLICY = PrecisionPolicy()


def _as_complex(z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteResult(f"non-finite argument {z!r}")
    return z


def _finite(z: complex, what: str) -> complex:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteResult(f"{what} is not finite")
    return z


def _check_window(s: complex) -> None:
    if abs(s.real) > WINDOW_RE or abs(s.imag) > WINDOW_IM:
        raise AccuracyNotReachable(
            f"s = {s} lies outside the accuracy window "
            f"|Re s| <= {WINDOW_RE:g}, |Im s| <= {WINDOW_IM:g}"
        )


# ---------------------------------------------------------------------------
# Gamma


def log_gamma(z) -> complex:
    """Logarithm of Euler's gamma function.

    The branch is the one analytic on C minus (-inf, 0] (the usual
    ``loggamma``), obtained by shifting to Re z >= 15 with the upward
    recurrence and applying the Stirling series there.
    """
    z = _as_complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise PoleAtNonPositiveInteger(f"gamma has a pole at {z.real:g}")
    n = max(0, math.ceil(_STIRLING_MIN - z.real))
    shift = 0j
    for k in range(n):
        shift += cmath.log(z + k)
    w = z + n
    inv = 1.0 / w
    inv2 = inv * inv
    series = 0j
    power = inv
    for k in range(1, 11):
        series += _STIRLING_COEF[k] * power
        power *= inv2
    out = (w - 0.5) * cmath.log(w) - w + _HALF_LOG_2PI + series - shift
    return _finite(out, "log_gamma")


def gamma(z) -> complex:
    """Euler's gamma function as ``exp(log_gamma(z))``; real on the real axis."""
    z = _as_complex(z)
    lg = log_gamma(z)
    try:
        if z.imag == 0.0:
            sign = -1.0 if round(lg.imag / math.pi) % 2 else 1.0
            return complex(sign * math.exp(lg.real), 0.0)
        return _finite(cmath.exp(lg), "gamma")
    except OverflowError as exc:
        raise NonFiniteResult(f"gamma({z}) overflows") from exc


# ---------------------------------------------------------------------------
# Hurwitz / Riemann zeta


def _em_body(s: complex, a: float, m: int, k: int) -> tuple[complex, float, float]:
    """Euler-Maclaurin sum for zeta(s, a) without the (M+a)^(1-s)/(s-1) term.

    Returns ``(body, truncation_bound, sum_of_term_magnitudes)``.
    """
    body = 0j
    mag = 0.0
    for n in range(m):
        t = (n + a) ** (-s)
        body += t
        mag += abs(t)
    x = m + a
    xs = x ** (-s)
    body += 0.5 * xs
    mag += abs(xs)
    factor = s * xs / x
    inv_x2 = 1.0 / (x * x)
    for j in range(1, k + 1):
        body += _EM_COEF[j] * factor
        factor *= (s + 2 * j - 1) * (s + 2 * j) * inv_x2
    sigma = s.real + 2 * k + 1
    if sigma > 0:
        trunc = abs(_EM_COEF[k + 1] * factor) * abs(s + 2 * k + 1) / sigma
    else:
        trunc = math.inf
    return body, trunc, mag


def _rounding(s: complex, x: float) -> float:
    # relative rounding per power x^(-s): the phase s*log(x) is only known to
    # about eps * |s log x|
    return 2 * _EPS * (1.0 + abs(s) * math.log(x))


def _hurwitz_direct(s: complex, a: float, policy: PrecisionPolicy) -> tuple[complex, float]:
    m = policy.series_terms
    k = policy.bernoulli_terms
    while True:
        body, trunc, mag = _em_body(s, a, m, k)
        pole = (m + a) ** (1 - s) / (s - 1)
        val = body + pole
        scale = max(1.0, abs(val))
        if trunc <= 0.1 * policy.target_abs_err * scale or m >= _MAX_SERIES_TERMS:
            break
        m *= 2
    return val, trunc + _rounding(s, m + a) * (mag + abs(pole))


def _hurwitz(s: complex, a: float, policy: PrecisionPolicy, reflect: bool = True) -> complex:
    if s == 1:
        raise PoleAtOne("zeta(s, a) has a pole at s = 1")
    val, err = _hurwitz_direct(s, a, policy)
    scale = max(1.0, abs(val))
    if err <= policy.target_abs_err * scale:
        return _finite(val, "hurwitz_zeta")
    if reflect:
        out = _hurwitz_reflected(s, a, policy)
        if out is not None:
            return out
    raise AccuracyNotReachable(
        f"zeta({s}, {a}): estimated error {err:.3g} exceeds budget "
        f"{policy.target_abs_err:.3g} * {scale:.3g}"
    )


def _hurwitz_reflected(s: complex, a: float, policy: PrecisionPolicy) -> complex | None:
    # Hurwitz's formula, a = j/N:
    # zeta(s, a) = 2 Gamma(1-s) (2 pi N)^(s-1) sum_b cos(pi(1-s)/2 - 2 pi b j/N) zeta(1-s, b/N)
    frac = Fraction(a).limit_denominator(_MAX_REFLECT_DENOMINATOR)
    if float(frac) != a or s.real > 0.5:
        return None
    j, n = frac.numerator, frac.denominator
    w = 1 - s
    pref = 2 * gamma(w) * (2 * math.pi * n) ** (-w)
    total = 0j
    mag = 0.0
    inner_err = 0.0
    for b in range(1, n + 1):
        c = cmath.cos(math.pi * w / 2 - 2 * math.pi * b * j / n)
        z, e = _hurwitz_direct(w, b / n, policy)
        total += c * z
        mag += abs(c * z)
        inner_err += abs(c) * e
    val = pref * total
    scale = max(1.0, abs(val))
    # gamma and cos carry a few ulps of relative error each
    err = abs(pref) * (inner_err + 32 * _EPS * mag)
    if err > policy.target_abs_err * scale:
        raise AccuracyNotReachable(
            f"zeta({s}, {a}) via reflection: estimated error {err:.3g} too large"
        )
    return _finite(val, "hurwitz_zeta")


def hurwitz_zeta(s, a: float = 1.0, policy: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """Analytically continued Hurwitz zeta function sum_{n>=0} (n+a)^(-s), 0 < a <= 1."""
    s = _as_complex(s)
    a = float(a)
    if not (0.0 < a <= 1.0):
        raise ValueError(f"Hurwitz parameter must lie in (0, 1], got {a}")
    _check_window(s)
    return _hurwitz(s, a, policy)


def riemann_zeta(s, policy: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    return hurwitz_zeta(s, 1.0, policy)


# ---------------------------------------------------------------------------
# Dirichlet L-functions


class CharacterLike(Protocol):
    modulus: int

    @property
    def is_principal(self) -> bool: ...

    def value(self, n: int) -> complex: ...


def _expm1_over(w: complex, log_ratio: float) -> complex:
    # (exp(w L) - 1) / w, stable as w -> 0
    z = w * log_ratio
    if abs(z) < 0.05:
        acc = 0j
        term = complex(log_ratio)
        for j in range(1, 10):
            acc += term
            term *= z / (j + 1)
        return acc
    return (cmath.exp(z) - 1) / w


def _dirichlet_em(s: complex, n: int, residues, values, policy) -> complex | None:
    # Combined Euler-Maclaurin for a non-principal character: the individual
    # 1/(s-1) poles cancel because sum chi(a) = 0, which is done analytically here.
    k = policy.bernoulli_terms
    m = policy.series_terms
    w = 1 - s
    while True:
        body = 0j
        trunc = 0.0
        mag = 0.0
        tail = 0j
        for r, chi in zip(residues, values):
            x = r / n
            b, t, g = _em_body(s, x, m, k)
            body += chi * b
            trunc += t
            mag += g
            tail += chi * _expm1_over(w, math.log1p(x / m))
        tail *= -(m ** w)
        scale_n = abs(n ** (-s))
        val = n ** (-s) * (body + tail)
        scale = max(1.0, abs(val))
        if trunc * scale_n <= 0.1 * policy.target_abs_err * scale or m >= _MAX_SERIES_TERMS:
            break
        m *= 2
    err = scale_n * (trunc + _rounding(s, m + 1) * (mag + abs(tail)))
    if err <= policy.target_abs_err * scale:
        return val
    return None


def dirichlet_l(s, chi: CharacterLike, policy: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """L(s, chi) = N^(-s) sum_{a=1..N} chi(a) zeta(s, a/N).

    ``chi`` is any object with ``modulus``, ``is_principal`` and ``value(n)``.
    For non-principal characters the result is entire and s = 1 is allowed.
    """
    s = _as_complex(s)
    _check_window(s)
    n = chi.modulus
    if n == 1:
        return riemann_zeta(s, policy)
    principal = chi.is_principal
    if principal and s == 1:
        raise PoleAtOne("L(s, chi_0) has a pole at s = 1")
    residues = [r for r in range(1, n + 1) if math.gcd(r, n) == 1]
    values = [complex(chi.value(r)) for r in residues]
    if not principal:
        out = _dirichlet_em(s, n, residues, values, policy)
        if out is not None:
            return _finite(out, "dirichlet_l")
    total = 0j
    for r, v in zip(residues, values):
        total += v * _hurwitz(s, r / n, policy)
    return _finite(n ** (-s) * total, "dirichlet_l")


# ---------------------------------------------------------------------------
# Kronecker symbol and quadratic characters


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@lru_cache(maxsize=None)
def _is_squarefree(m: int) -> bool:
    if m == 0:
        return False
    return all(e == 1 for e in factorint(abs(m)).values())


@lru_cache(maxsize=None)
def is_fundamental_discriminant(D: int) -> bool:
    if D in (0, 1):
        return False
    if D % 4 == 1:
        return _is_squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _is_squarefree(m)
    return False


def kronecker_symbol(D: int, n: int) -> int:
    """Kronecker symbol (D/n) for a fundamental discriminant D and n >= 1."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if not is_fundamental_discriminant(D):
        raise ValueError(f"{D} is not a fundamental discriminant")
    result = 1
    while n % 2 == 0:
        n //= 2
        if D % 2 == 0:
            return 0
        if D % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * _jacobi(D, n)


class KroneckerCharacter:
    """The real primitive character chi_D attached to a fundamental discriminant."""

    is_principal = False

    def __init__(self, D: int):
        if not is_fundamental_discriminant(D):
            raise ValueError(f"{D} is not a fundamental discriminant")
        self.D = D
        self.modulus = abs(D)
        self._table = [kronecker_symbol(D, r) if r else 0 for r in range(self.modulus)]

    def value(self, n: int) -> complex:
        return complex(self._table[n % self.modulus])

    def __repr__(self) -> str:
        return f"KroneckerCharacter({self.D})"


def dedekind_zeta_quadratic(s, D: int, policy: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """zeta_K(s) = zeta(s) L(s, chi_D) for K the quadratic field of discriminant D."""
    s = _as_complex(s)
    if s == 1:
        raise PoleAtOne("zeta_K has a pole at s = 1")
    chi = _kronecker_cached(D)
    return riemann_zeta(s, policy) * dirichlet_l(s, chi, policy)


@lru_cache(maxsize=64)
def _kronecker_cached(D: int) -> KroneckerCharacter:
    return KroneckerCharacter(D)


# ---------------------------------------------------------------------------
# Euler products


@lru_cache(maxsize=8)
def primes_upto(limit: int) -> tuple[int, ...]:
    return tuple(primerange(2, limit + 1))


def euler_product(s, chi: CharacterLike, cutoff: int, skip: Iterable[int] = ()) -> complex:
    """Truncated Euler product prod_{p <= cutoff} (1 - chi(p) p^-s)^-1."""
    s = _as_complex(s)
    skip = set(skip)
    out = 1 + 0j
    for p in primes_upto(cutoff):
        if p in skip:
            continue
        out /= 1 - chi.value(p) * p ** (-s)
    return out
