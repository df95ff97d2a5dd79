"""Command line interface: ``adelgamma {gamma,split,field,verify,scan}``.

Exit codes: 0 all checks passed, 1 a residual exceeded the tolerance,
2 invalid input or failed precondition, 3 inconclusive (pole guard).
The environment variable ADELGAMMA_POLICY may hold a JSON object overriding
PrecisionPolicy fields.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from fractions import Fraction

from . import adelic, amplitudes as amp
from .analytic import DEFAULT_POLICY, PrecisionPolicy
from .characters import GlobalCharacterQ, QuadCharacterData, parse_character
from .errors import AdelicError, PoleError
from .local import gamma_complex, gamma_q, gamma_real, local_gamma_ramified
from .quadfield import fundamental_unit, make_field, split_prime, torsion_units

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3

VERIFY_IDS = (
    "gamma-q",
    "beta-q",
    "beta-quadratic",
    "gamma-quadratic",
    "amplitude-adelic",
    "superstring-adelic",
    "heterotic-factorization",
    "veneziano-ramified-shift",
)


class InputError(Exception):
    pass


def load_policy(env=None) -> PrecisionPolicy:
    env = os.environ if env is None else env
    raw = env.get("ADELGAMMA_POLICY")
    if not raw:
        return DEFAULT_POLICY
    try:
        return PrecisionPolicy.from_mapping(json.loads(raw))
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad ADELGAMMA_POLICY: {exc}") from exc


def parse_number(text: str):
    """Fraction for rational literals ('2', '1/2', '-0.25'), complex otherwise ('0.3+2j')."""
    text = text.strip().replace(" ", "")
    try:
        return Fraction(text)
    except ValueError:
        pass
    try:
        return complex(text.replace("i", "j"))
    except ValueError as exc:
        raise InputError(f"cannot parse number {text!r}") from exc


def _num(z) -> list | str:
    if isinstance(z, Fraction):
        return str(z)
    z = complex(z)
    return [z.real, z.imag]


def _fmt(z) -> str:
    if isinstance(z, Fraction):
        return str(z)
    z = complex(z)
    if z.imag == 0:
        return repr(z.real)
    return f"{z.real!r}{z.imag:+.17g}j"


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------
# gamma / split / field


def cmd_gamma(args, policy) -> int:
    alpha = parse_number(args.alpha)
    try:
        if args.place == "real":
            val = gamma_real(complex(alpha), args.nu, policy)
        elif args.place == "complex":
            val = gamma_complex(complex(alpha), args.nu, policy)
        else:
            if args.q is None:
                raise InputError("--q is required for a p-adic place")
            if args.character:
                chi = parse_character(args.character)
                p = _prime_of(args.q)
                comp = chi.primitive().local_component(p)
                val = local_gamma_ramified(complex(alpha), comp, args.q) if comp.rank else gamma_q(alpha, args.q, policy)
            else:
                val = gamma_q(alpha, args.q, policy)
    except PoleError as exc:
        _emit(args, {"place": args.place, "alpha": _num(alpha), "pole": str(exc)}, f"pole: {exc}")
        return EXIT_INCONCLUSIVE
    payload = {"place": args.place, "alpha": _num(alpha), "nu": args.nu, "q": args.q, "value": _num(val)}
    _emit(args, payload, _fmt(val))
    return EXIT_OK


def _prime_of(q: int) -> int:
    from sympy import factorint

    f = factorint(q)
    if len(f) != 1:
        raise InputError(f"{q} is not a prime power")
    return next(iter(f))


def cmd_split(args, policy) -> int:
    fld = make_field(args.d)
    if args.p is not None:
        primes = [args.p]
    elif args.upto is not None:
        from sympy import primerange

        primes = list(primerange(2, args.upto + 1))
    else:
        raise InputError("give --p or --upto")
    rows = [split_prime(fld, p).as_dict() for p in primes]
    if args.format == "json":
        print(json.dumps(rows, sort_keys=True))
    else:
        for r in rows:
            divs = " ".join(f"({a},{b})" for a, b in r["divisors"]) if r["divisors"] else "-"
            print(f"p={r['p']} case={r['case']} q={r['q']} divisors={divs} hensel_root={r['hensel_root']}")
    return EXIT_OK


def cmd_field(args, policy) -> int:
    fld = make_field(args.d)
    payload = {"d": fld.d, "D": fld.D, "one_class": fld.one_class, "ramified": sorted(fld.ramified_ranks),
               "basis": fld.basis}
    if fld.d > 0:
        u = fundamental_unit(fld.d)
        payload["fundamental_unit"] = {"x": u.x, "y": u.y, "norm": u.norm, "basis": u.basis, "value": u.value.real}
    payload["torsion"] = [t.label for t in torsion_units(fld.d)]
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit(args, payload, text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _mandelstam_points(n: int, seed: int, total: float, complex_pts: bool) -> list:
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        s, t = rng.uniform(-7, 7), rng.uniform(-7, 7)
        if complex_pts:
            s, t = complex(s, rng.uniform(-5, 5)), complex(t, rng.uniform(-5, 5))
        out.append(amp.MandelstamPoint.from_st(s, t, total))
    return out


def _char(text: str | None, default: str) -> GlobalCharacterQ:
    return GlobalCharacterQ(parse_character(text or default))


def _run_verify(args, policy) -> list:
    tol, n, seed = args.tolerance, args.points, args.seed
    ident = args.identity
    if ident == "gamma-q":
        g = _char(args.character, "principal")
        if args.alpha:
            alphas = [complex(parse_number(args.alpha))]
        else:
            alphas = [pt.alpha for pt in adelic.random_points(n, seed)]
        return [adelic.verify_gamma_adelic_Q(a, g, policy, tol, args.convention) for a in alphas]
    if ident == "beta-q":
        theta, pi = _char(args.theta, "principal"), _char(args.pi, "principal")
        return [adelic.verify_beta_adelic_Q(pt, theta, pi, policy, tol, args.convention)
                for pt in adelic.random_points(n, seed)]
    if ident == "beta-quadratic":
        d = _need_d(args)
        return [adelic.verify_beta_quadratic_principal(d, pt, policy, tol) for pt in adelic.random_points(n, seed)]
    if ident == "gamma-quadratic":
        d = _need_d(args)
        if args.character:
            qc = QuadCharacterData(d, "norm_induced", chi=parse_character(args.character))
        else:
            qc = QuadCharacterData(d, "principal")
        return [adelic.verify_gamma_adelic_quadratic(d, pt.alpha, qc, policy, tol, args.convention, strict=False)
                for pt in adelic.random_points(n, seed)]
    if ident == "amplitude-adelic":
        d = _need_d(args)
        total = amp.VENEZIANO_TACHYON.mass_sq_sum if d > 0 else amp.VIRASORO_TACHYON.mass_sq_sum
        return [amp.amplitude_adelic_check(d, pt, policy=policy, tolerance=tol)
                for pt in _mandelstam_points(n, seed, float(total), True)]
    if ident == "superstring-adelic":
        g = _char(args.character, "kronecker:-4")
        return [amp.superstring_adelic_check(pt, [g, g, g], policy, tol, args.convention)
                for pt in _mandelstam_points(n, seed, 0.0, True)]
    if ident == "heterotic-factorization":
        ks = [args.k] if args.k else [1, 2, 3, 4]
        out = []
        for pt in _mandelstam_points(n, seed, 0.0, False):
            for k in ks:
                out.append(amp.heterotic_factorization_check(pt, k, args.variant, policy, tol))
            for m in range(5):
                out.append(amp.shift_identity_check(m, pt.s, args.variant, policy, tol))
        return out
    if ident == "veneziano-ramified-shift":
        return [amp.relation_v110_check(pt, policy=policy, tolerance=tol)
                for pt in _mandelstam_points(n, seed, float(amp.VENEZIANO_TACHYON.mass_sq_sum), False)]
    raise InputError(f"unknown identity {ident!r}")


def _need_d(args) -> int:
    if args.d is None:
        raise InputError("--d is required")
    return args.d


def exit_code(reports) -> int:
    verdicts = [r.verdict for r in reports]
    if "fail" in verdicts:
        return EXIT_FAIL
    if "inconclusive" in verdicts:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_verify(args, policy) -> int:
    reports = _run_verify(args, policy)
    header = {"identity": args.identity, "seed": args.seed, "tolerance": args.tolerance,
              "points": args.points, "policy": policy.as_dict()}
    code = exit_code(reports)
    if args.format == "json":
        print(json.dumps({"header": header, "reports": [r.as_dict() for r in reports], "exit_code": code},
                         sort_keys=True))
    else:
        print(f"# identity={args.identity} seed={args.seed} tolerance={args.tolerance:g} points={args.points}")
        for r in reports:
            res = "-" if r.residual is None else f"{r.residual:.3e}"
            print(f"{r.identity_id} verdict={r.verdict} residual={res}")
        counts = {v: sum(r.verdict == v for r in reports) for v in ("pass", "fail", "inconclusive", "diagnostic")}
        print("# " + " ".join(f"{k}={v}" for k, v in counts.items()) + f" exit={code}")
    return code


# ---------------------------------------------------------------------------
# scan


def cmd_scan(args, policy) -> int:
    rows = amp.scan(args.amplitude, (args.s_min, args.s_max), (args.t_min, args.t_max), args.step, policy, args.k)
    if args.format == "json":
        print(json.dumps(rows, sort_keys=True))
        return EXIT_OK
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=amp.SCAN_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: ("" if r[k] is None else r[k]) for k in amp.SCAN_COLUMNS})
    sys.stdout.write(buf.getvalue())
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="adelgamma", description="Local and adelic gamma/beta functions.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gamma", help="evaluate a local gamma function")
    g.add_argument("--place", choices=("real", "complex", "p"), required=True)
    g.add_argument("--alpha", required=True)
    g.add_argument("--nu", type=int, default=0)
    g.add_argument("--q", type=int)
    g.add_argument("--character", help="Dirichlet character whose local component is used")
    g.add_argument("--format", choices=("text", "json"), default="text")
    g.set_defaults(func=cmd_gamma)

    s = sub.add_parser("split", help="prime divisors in a one-class quadratic field")
    s.add_argument("--d", type=int, required=True)
    grp = s.add_mutually_exclusive_group(required=True)
    grp.add_argument("--p", type=int)
    grp.add_argument("--upto", type=int)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_split)

    f = sub.add_parser("field", help="basic data of Q(sqrt d)")
    f.add_argument("--d", type=int, required=True)
    f.add_argument("--format", choices=("text", "json"), default="text")
    f.set_defaults(func=cmd_field)

    v = sub.add_parser("verify", help="check an identity at seeded random points")
    v.add_argument("identity", choices=VERIFY_IDS)
    v.add_argument("--points", type=int, default=10)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tolerance", type=float, default=adelic.DEFAULT_TOLERANCE)
    v.add_argument("--d", type=int)
    v.add_argument("--alpha")
    v.add_argument("--character")
    v.add_argument("--theta")
    v.add_argument("--pi")
    v.add_argument("--k", type=int, choices=(1, 2, 3, 4))
    v.add_argument("--convention", choices=("inverse", "direct"), default="inverse")
    v.add_argument("--variant", choices=("derived", "stated"), default="derived")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)

    sc = sub.add_parser("scan", help="amplitude values on an (s, t) grid")
    sc.add_argument("amplitude", choices=("veneziano", "virasoro", "superstring", "heterotic"))
    sc.add_argument("--s-min", type=float, default=-6)
    sc.add_argument("--s-max", type=float, default=2)
    sc.add_argument("--t-min", type=float, default=-6)
    sc.add_argument("--t-max", type=float, default=2)
    sc.add_argument("--step", type=float, default=0.5)
    sc.add_argument("--k", type=int, default=1, choices=(1, 2, 3, 4))
    sc.add_argument("--format", choices=("csv", "json"), default="csv")
    sc.set_defaults(func=cmd_scan)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        policy = load_policy()
        return args.func(args, policy)
    except PoleError as exc:
        print(f"pole: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (InputError, AdelicError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
