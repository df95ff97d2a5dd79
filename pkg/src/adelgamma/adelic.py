"""Regularized adelic products and the verifiers of the adelic gamma/beta formulas.

Every regularized Euler product is evaluated as a ratio of analytically
continued L-functions whose Euler factors formally reproduce the product
(for example the product over unramified p of
(1 - p^(a-1) theta(p)) / (1 - p^-a conj(theta(p))) is L(a, conj theta) / L(1-a, theta)).

Each verifier returns a :class:`RegProductReport`.  A point where a
denominator or a gamma argument comes within ``policy.pole_guard`` of a
zero/pole is reported as inconclusive, never as a pass.
"""

from __future__ import annotations

import cmath
import json
import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .analytic import (
    DEFAULT_POLICY,
    PrecisionPolicy,
    dedekind_zeta_quadratic,
    dirichlet_l,
    primes_upto,
    riemann_zeta,
)
from .characters import (
    DirichletCharacterSpec,
    GlobalCharacterQ,
    QuadCharacterData,
    conductor_and_ranks,
    kappa_global,
    kronecker,
    sigma_of,
    ramified_exponentials,
    validate_quad_character,
)
from .errors import (
    AdelicError,
    ConstraintViolation,
    PoleError,
    PoleGuardError,
)
from .local import beta_complex, beta_real, gamma_complex, gamma_real, kappa_local, reduced_gamma
from .quadfield import QuadField, make_field

__all__ = [
    "RegProductReport",
    "IdentityPoint",
    "random_points",
    "l_ratio",
    "reg_gamma_ratio_Q",
    "kappa_phase_constant",
    "calibrate_kappa_phase",
    "verify_gamma_adelic_Q",
    "verify_beta_adelic_Q",
    "verify_beta_quadratic_principal",
    "verify_gauss_field",
    "verify_gamma_adelic_quadratic",
    "truncated_product",
    "DEFAULT_TOLERANCE",
]

DEFAULT_TOLERANCE = 1e-8
KAPPA_CONVENTIONS = ("inverse", "direct")


# ---------------------------------------------------------------------------
# Reports


def _pair(z) -> list | None:
    if z is None:
        return None
    z = complex(z)
    return [z.real, z.imag]


@dataclass
class RegProductReport:
    """Outcome of one identity check.

    ``residual`` is |lhs - rhs|; the verdict compares it with
    ``tolerance * max(1, |rhs|)``.  In ``mode == 'modulus'`` the verdict uses
    ||lhs|/|rhs| - 1| instead (stored in ``details['modulus_residual']``).
    """

    identity_id: str
    inputs: dict
    lhs: complex | None
    rhs: complex | None
    pole_guard_ok: bool = True
    tolerance: float = DEFAULT_TOLERANCE
    mode: str = "full"
    truncated_partials: list | None = None
    details: dict = field(default_factory=dict)
    verdict: str = ""

    def __post_init__(self):
        if not self.verdict:
            self.verdict = self._decide()

    @property
    def residual(self) -> float | None:
        if self.lhs is None or self.rhs is None:
            return None
        return abs(self.lhs - self.rhs)

    @property
    def modulus_residual(self) -> float | None:
        if self.lhs is None or self.rhs is None or self.rhs == 0:
            return None
        return abs(abs(self.lhs) / abs(self.rhs) - 1)

    def _decide(self) -> str:
        if not self.pole_guard_ok:
            return "inconclusive"
        if self.lhs is None or self.rhs is None:
            return "diagnostic"
        if self.mode == "modulus":
            ok = self.modulus_residual is not None and self.modulus_residual <= self.tolerance
        else:
            ok = self.residual <= self.tolerance * max(1.0, abs(self.rhs))
        return "pass" if ok else "fail"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def as_dict(self) -> dict:
        out = {
            "identity_id": self.identity_id,
            "inputs": self.inputs,
            "lhs": _pair(self.lhs),
            "rhs": _pair(self.rhs),
            "residual": self.residual,
            "pole_guard_ok": self.pole_guard_ok,
            "verdict": self.verdict,
            "tolerance": self.tolerance,
            "mode": self.mode,
        }
        if self.mode == "modulus":
            out["modulus_residual"] = self.modulus_residual
        if self.truncated_partials is not None:
            out["truncated_partials"] = [[p, _pair(v)] for p, v in self.truncated_partials]
        if self.details:
            out["details"] = self.details
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)


def _inconclusive(identity_id: str, inputs: dict, reason: str, tolerance: float) -> RegProductReport:
    return RegProductReport(
        identity_id, inputs, None, None, pole_guard_ok=False, tolerance=tolerance,
        details={"reason": reason},
    )


def _cx(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


@dataclass(frozen=True)
class IdentityPoint:
    """alpha, beta and gamma = total - alpha - beta (total is 1, or 0 for primed betas)."""

    alpha: complex
    beta: complex
    total: float = 1.0

    @property
    def gamma(self) -> complex:
        return self.total - complex(self.alpha) - complex(self.beta)

    @property
    def args(self) -> tuple[complex, complex, complex]:
        return complex(self.alpha), complex(self.beta), self.gamma

    def as_dict(self) -> dict:
        return {"alpha": _cx(self.alpha), "beta": _cx(self.beta), "gamma": _cx(self.gamma)}


def random_points(n: int, seed: int = 0, re=(0.2, 0.8), im=(-5.0, 5.0), total: float = 1.0) -> list[IdentityPoint]:
    """Seeded constrained points with all three real parts inside ``re``."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        a = complex(rng.uniform(*re), rng.uniform(*im))
        b = complex(rng.uniform(*re), rng.uniform(*im))
        pt = IdentityPoint(a, b, total)
        g = pt.gamma
        if re[0] <= g.real <= re[1] and im[0] <= g.imag <= im[1]:
            out.append(pt)
    return out


# ---------------------------------------------------------------------------
# L-function ratios


def _guarded(value: complex, policy: PrecisionPolicy, what: str) -> complex:
    if abs(value) < policy.pole_guard:
        raise PoleGuardError(f"|{what}| = {abs(value):.3g} is below the pole guard")
    return value


def _l(s: complex, chi: DirichletCharacterSpec, policy: PrecisionPolicy) -> complex:
    if chi.modulus == 1:
        return riemann_zeta(s, policy)
    return dirichlet_l(s, chi, policy)


def l_ratio(x, chi: DirichletCharacterSpec, policy: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """L(x, conj chi) / L(1 - x, chi) for a primitive chi."""
    x = complex(x)
    for z in (x, 1 - x):
        if chi.modulus == 1 and abs(z - 1) < policy.pole_guard:
            raise PoleGuardError(f"zeta pole at {z}")
    num = _l(x, chi.conj(), policy)
    den = _guarded(_l(1 - x, chi, policy), policy, f"L({1 - x}, chi)")
    return num / den


def _local_factor(x: complex, chi: DirichletCharacterSpec, p: int) -> complex:
    """(1 - p^(x-1) chi(p)) / (1 - p^-x conj chi(p)) at an unramified p."""
    c = chi.value(p)
    return (1 - p ** (x - 1) * c) / (1 - p ** (-x) * c.conjugate())


def reg_gamma_ratio_Q(alpha, theta: GlobalCharacterQ | DirichletCharacterSpec, policy: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """reg prod_{p unramified} Gamma_p(alpha + i alpha_p) = L(alpha, conj theta)/L(1 - alpha, theta)."""
    chi = theta.primitive if isinstance(theta, GlobalCharacterQ) else theta.primitive()
    return l_ratio(alpha, chi, policy)


# ---------------------------------------------------------------------------
# kappa conventions


def _kappa(g: GlobalCharacterQ, convention: str) -> complex:
    """The unit constant of the gamma formula over Q.

    ``direct``: prod kappa(theta_p) p^(-i alpha_p rho_p) with the local
    Gauss sums exactly as defined.  ``inverse``: the same product with every
    local kappa(theta_p) replaced by its inverse (= complex conjugate).  Only
    the latter makes the identity hold for all characters; see
    :func:`calibrate_kappa_phase`.
    """
    if convention not in KAPPA_CONVENTIONS:
        raise ValueError(f"unknown kappa convention {convention!r}")
    exp = ramified_exponentials(g)
    if convention == "direct":
        return kappa_global(g, exp)
    prim = g.primitive
    _, ranks = conductor_and_ranks(prim)
    out = 1 + 0j
    for p, rho in ranks.items():
        out *= kappa_local(prim.local_component(p)).conjugate() * exp.alpha(p) ** (-rho)
    return out


def calibrate_kappa_phase(convention: str = "inverse", policy: PrecisionPolicy = DEFAULT_POLICY) -> complex:
    """One-point calibration at chi_{-4}, alpha = 1/2.

    Returns the fourth root of unity c with lhs = c * rhs at that point.  With
    the ``inverse`` convention c = 1; with ``direct`` c = -1, and the direct
    convention then still fails for other characters (e.g. modulo 5), because
    the discrepancy is conj(kappa)/kappa, which depends on the character.
    """
    g = GlobalCharacterQ(kronecker(-4))
    rep = verify_gamma_adelic_Q(0.5, g, policy=policy, convention=convention, phase=1.0)
    ratio = rep.lhs / rep.rhs
    k = round(cmath.phase(ratio) / (math.pi / 2)) % 4
    c = (1, 1j, -1, -1j)[k]
    if abs(ratio - c) > 1e-6:
        raise AdelicError(f"calibration ratio {ratio} is not a fourth root of unity")
    return c


_PHASE_CACHE: dict = {}


def kappa_phase_constant(convention: str = "inverse") -> complex:
    if convention not in _PHASE_CACHE:
        _PHASE_CACHE[convention] = calibrate_kappa_phase(convention)
    return _PHASE_CACHE[convention]


# ---------------------------------------------------------------------------
# Field Q


def verify_gamma_adelic_Q(
    alpha,
    g: GlobalCharacterQ,
    policy: PrecisionPolicy = DEFAULT_POLICY,
    tolerance: float = DEFAULT_TOLERANCE,
    convention: str = "inverse",
    phase: complex | None = None,
    mode: str = "full",
) -> RegProductReport:
    """Gamma_inf(alpha; nu) reg prod Gamma_p = theta(-1) kappa N^(1/2 - alpha).

    ``phase`` multiplies the right-hand side; by default it is the calibrated
    constant of the chosen convention.
    """
    alpha = complex(alpha)
    prim = g.primitive
    n0, _ = conductor_and_ranks(prim)
    inputs = {"alpha": _cx(alpha), "character": prim.serialize(), "nu": g.nu, "convention": convention}
    try:
        lhs = gamma_real(alpha, g.nu, policy) * reg_gamma_ratio_Q(alpha, prim, policy)
    except PoleError as exc:
        return _inconclusive("gamma-q", inputs, str(exc), tolerance)
    theta_minus_one = (-1) ** g.nu * (1 if prim.parity == 0 else -1)
    c = kappa_phase_constant(convention) if phase is None else phase
    kappa = _kappa(g, convention)
    rhs = c * theta_minus_one * kappa * n0 ** (0.5 - alpha)
    return RegProductReport(
        "gamma-q", inputs, lhs, rhs, tolerance=tolerance, mode=mode,
        details={"kappa": _cx(kappa), "phase": _cx(c), "conductor": n0},
    )


def verify_beta_adelic_Q(
    point: IdentityPoint,
    theta: GlobalCharacterQ,
    pi: GlobalCharacterQ,
    policy: PrecisionPolicy = DEFAULT_POLICY,
    tolerance: float = DEFAULT_TOLERANCE,
    convention: str = "inverse",
    mode: str = "full",
) -> RegProductReport:
    """B_inf reg prod_{p in F n F' n F''} B_p = kappa N^(1/2-a) N'^(1/2-b) N''^(1/2-c) / E.

    sigma = conj(theta pi).  Each primitive L-ratio contains the unramified
    factors of its own character; factors at primes ramified for one of the
    other two characters are divided back out of the left-hand side, and the
    same finitely many factors E appear on the right-hand side.
    """
    a, b, c = point.args
    if abs(a + b + c - 1) > 1e-12:
        raise ConstraintViolation("alpha + beta + gamma must equal 1")
    sigma = GlobalCharacterQ(sigma_of(theta.primitive, pi.primitive))
    chars = [theta, pi, sigma]
    prims = [x.primitive for x in chars]
    ranks = [conductor_and_ranks(x)[1] for x in prims]
    bad = sorted(set().union(*ranks))
    inputs = {
        **point.as_dict(),
        "theta": prims[0].serialize(),
        "pi": prims[1].serialize(),
        "sigma": prims[2].serialize(),
        "convention": convention,
    }
    try:
        b_inf = beta_real((a, chars[0].nu), (b, chars[1].nu), (c, chars[2].nu), policy)
        reg = 1 + 0j
        boundary = 1 + 0j
        for x, chi, rk in zip((a, b, c), prims, ranks):
            reg *= l_ratio(x, chi, policy)
            for p in bad:
                if p not in rk:
                    f = _local_factor(x, chi, p)
                    _guarded(f, policy, f"local factor at {p}")
                    boundary *= f
        lhs = b_inf * reg / boundary
    except PoleError as exc:
        return _inconclusive("beta-q", inputs, str(exc), tolerance)
    phase = kappa_phase_constant(convention)
    kappa = 1 + 0j
    rhs_mod = 1 + 0j
    for x, g in zip((a, b, c), chars):
        kappa *= phase * _kappa(g, convention)
        rhs_mod *= conductor_and_ranks(g.primitive)[0] ** (0.5 - x)
    rhs = kappa * rhs_mod / boundary
    return RegProductReport(
        "beta-q", inputs, lhs, rhs, tolerance=tolerance, mode=mode,
        details={"kappa": _cx(kappa), "boundary_factor": _cx(boundary), "extra_primes": bad},
    )


# ---------------------------------------------------------------------------
# Quadratic fields


def _field(fld) -> QuadField:
    return fld if isinstance(fld, QuadField) else make_field(int(fld))


def _zeta_k_ratio(x: complex, D: int, policy: PrecisionPolicy) -> complex:
    for z in (x, 1 - x):
        if abs(z - 1) < policy.pole_guard:
            raise PoleGuardError(f"zeta_K pole at {z}")
    num = dedekind_zeta_quadratic(x, D, policy)
    den = _guarded(dedekind_zeta_quadratic(1 - x, D, policy), policy, f"zeta_K({1 - x})")
    return num / den


def verify_beta_quadratic_principal(
    fld,
    point: IdentityPoint,
    policy: PrecisionPolicy = DEFAULT_POLICY,
    tolerance: float = DEFAULT_TOLERANCE,
    identity_id: str = "beta-quadratic",
) -> RegProductReport:
    """sqrt|D| = reg[prod_P B_p^2 prod_S B_q] * (B_omega, or B_inf^2 for d > 0).

    The identity holds for every quadratic field, so no one-class check is made.
    """
    fld = _field(fld)
    a, b, c = point.args
    if abs(a + b + c - 1) > 1e-12:
        raise ConstraintViolation("alpha + beta + gamma must equal 1")
    inputs = {"d": fld.d, "D": fld.D, **point.as_dict()}
    try:
        z = 1 + 0j
        for x in (a, b, c):
            z *= _zeta_k_ratio(x, fld.D, policy)
        if fld.d < 0:
            local = beta_complex(a, b, c, policy)
        else:
            local = beta_real(a, b, c, policy) ** 2
    except PoleError as exc:
        return _inconclusive(identity_id, inputs, str(exc), tolerance)
    rhs = math.sqrt(abs(fld.D))
    return RegProductReport(identity_id, inputs, z * local, complex(rhs), tolerance=tolerance)


def verify_gauss_field(point: IdentityPoint, policy: PrecisionPolicy = DEFAULT_POLICY, tolerance: float = DEFAULT_TOLERANCE) -> RegProductReport:
    """B_omega B_2 reg[prod_{p=1(4)} B_p^2 prod_{p=3(4)} B_{p^2}] = 2 over Q(i)."""
    a, b, c = point.args
    if abs(a + b + c - 1) > 1e-12:
        raise ConstraintViolation("alpha + beta + gamma must equal 1")
    inputs = {"d": -1, **point.as_dict()}
    try:
        b2 = 1 + 0j
        reg = 1 + 0j
        for x in (a, b, c):
            b2 *= reduced_gamma(cmath.exp(x * math.log(2)), 2, policy)
            # the odd part of the zeta_K ratio: divide out the factor at 2
            reg *= _zeta_k_ratio(x, -4, policy) / reduced_gamma(cmath.exp(x * math.log(2)), 2, policy)
        lhs = beta_complex(a, b, c, policy) * b2 * reg
    except PoleError as exc:
        return _inconclusive("gauss-field", inputs, str(exc), tolerance)
    return RegProductReport("gauss-field", inputs, lhs, 2 + 0j, tolerance=tolerance)


def _norm_induced_partner(chi: DirichletCharacterSpec, D: int) -> DirichletCharacterSpec:
    return (chi * kronecker(D)).primitive()


def verify_gamma_adelic_quadratic(
    fld,
    alpha,
    qc: QuadCharacterData,
    policy: PrecisionPolicy = DEFAULT_POLICY,
    tolerance: float = DEFAULT_TOLERANCE,
    convention: str = "inverse",
    strict: bool = True,
    cutoff: int = 1000,
) -> RegProductReport:
    """theta(-1) kappa (N|D|)^(1/2 - alpha) = reg prod Gamma * (Gamma_omega or Gamma_inf Gamma_inf).

    Principal data: the regularized product is zeta_K(alpha)/zeta_K(1-alpha).
    Norm-induced data theta = chi o Norm: the Hecke L-function factors as
    L(s, chi) L(s, chi chi_D), so the product is the corresponding pair of
    Dirichlet L-ratios and N|D| = cond(chi) cond(chi chi_D).  kappa is
    evaluated through the same factorization, as the product of the two
    Dirichlet kappa constants, times i for imaginary fields (the
    archimedean factor Gamma_omega(a; 0) equals i Gamma_inf(a; 0) Gamma_inf(a; 1)).
    Explicit tables produce a truncated-product diagnostic only.
    """
    fld = _field(fld)
    alpha = complex(alpha)
    exps = validate_quad_character(qc, strict=strict)
    inputs = {"d": fld.d, "alpha": _cx(alpha), "kind": qc.kind}
    if qc.kind == "explicit":
        partials = truncated_product(_explicit_gamma_factors(fld, alpha, exps, policy), cutoff)
        return RegProductReport(
            "gamma-quadratic", inputs, None, None, tolerance=tolerance,
            truncated_partials=partials, verdict="diagnostic",
        )
    chi = qc.chi.primitive() if qc.kind == "norm_induced" else DirichletCharacterSpec(1)
    psi = _norm_induced_partner(chi, fld.D)
    inputs["character"] = chi.serialize()
    inputs["partner"] = psi.serialize()
    try:
        reg = l_ratio(alpha, chi, policy) * l_ratio(alpha, psi, policy)
        if fld.d < 0:
            arch = gamma_complex(alpha, qc.nu, policy)
        else:
            arch = gamma_real(alpha + 1j * qc.a, qc.nu, policy) * gamma_real(alpha, qc.nu_prime, policy)
        lhs = reg * arch
    except PoleError as exc:
        return _inconclusive("gamma-quadratic", inputs, str(exc), tolerance)
    n_chi = conductor_and_ranks(chi)[0]
    n_psi = conductor_and_ranks(psi)[0]
    phase = kappa_phase_constant(convention)
    kappa = phase * _kappa(GlobalCharacterQ(chi), convention) * phase * _kappa(GlobalCharacterQ(psi), convention)
    if fld.d < 0:
        kappa *= 1j
    rhs = kappa * (n_chi * n_psi) ** (0.5 - alpha)
    return RegProductReport(
        "gamma-quadratic", inputs, lhs, rhs, tolerance=tolerance,
        details={"kappa": _cx(kappa), "N_times_absD": n_chi * n_psi},
    )


def _explicit_gamma_factors(fld: QuadField, alpha: complex, exps, policy) -> Callable[[int], complex]:
    def factor(p: int) -> complex:
        kind = exps.kind(p)
        if kind == "inert":
            return reduced_gamma(cmath.exp(2 * alpha * math.log(p)) * exps.inert(p), p * p, policy)
        val = reduced_gamma(cmath.exp(alpha * math.log(p)) * exps.alpha(p), p, policy)
        if kind == "split":
            val *= reduced_gamma(cmath.exp(alpha * math.log(p)) * exps.alpha_prime(p), p, policy)
        return val

    return factor


# ---------------------------------------------------------------------------
# Diagnostics


def truncated_product(factor: Callable[[int], complex], cutoff: int, primes: Iterable[int] | None = None) -> list[tuple[int, complex]]:
    """Running products over primes p <= cutoff, recorded at 10, 100, ... and at the cutoff.

    Purely diagnostic: the adelic products do not converge on the constraint set.
    """
    if cutoff > 10 ** 6:
        raise ValueError("cutoff must not exceed 10^6")
    marks = [10 ** k for k in range(1, 7) if 10 ** k < cutoff] + [cutoff]
    out = []
    acc = 1 + 0j
    mi = 0
    for p in (primes if primes is not None else primes_upto(cutoff)):
        while mi < len(marks) and p > marks[mi]:
            out.append((marks[mi], acc))
            mi += 1
        try:
            acc *= factor(p)
        except (KeyError, AdelicError):
            break
    while mi < len(marks):
        out.append((marks[mi], acc))
        mi += 1
    return out
