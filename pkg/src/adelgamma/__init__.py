"""Local and adelic gamma and beta functions over Q and quadratic fields, with string amplitudes."""

from . import adelic, amplitudes, analytic, characters, local, quadfield
from .analytic import DEFAULT_POLICY, PrecisionPolicy, dirichlet_l, hurwitz_zeta, riemann_zeta
from .characters import DirichletCharacterSpec, GlobalCharacterQ, QuadCharacterData, kronecker, parse_character
from .errors import *  # noqa: F401,F403
from .errors import __all__ as _error_names
from .local import beta_complex, beta_padic, beta_primed, beta_real, gamma_complex, gamma_q, gamma_real
from .quadfield import fundamental_unit, make_field, split_prime

__version__ = "0.1.0"

__all__ = [
    "adelic", "amplitudes", "analytic", "characters", "local", "quadfield",
    "DEFAULT_POLICY", "PrecisionPolicy", "dirichlet_l", "hurwitz_zeta", "riemann_zeta",
    "DirichletCharacterSpec", "GlobalCharacterQ", "QuadCharacterData", "kronecker", "parse_character",
    "beta_complex", "beta_padic", "beta_primed", "beta_real", "gamma_complex", "gamma_q", "gamma_real",
    "fundamental_unit", "make_field", "split_prime",
    *_error_names,
]
