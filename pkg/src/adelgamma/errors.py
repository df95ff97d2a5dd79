"""Exception hierarchy shared by every module of the package."""

__all__ = [
    "AdelicError",
    "PoleError",
    "PoleAtNonPositiveInteger",
    "PoleAtOne",
    "PoleGuardError",
    "AccuracyNotReachable",
    "NonFiniteResult",
    "ConstraintViolation",
    "NotSquarefree",
    "NotOneClass",
    "SolverExhausted",
    "InconsistentOrder",
    "ParityViolation",
    "TrivialityViolation",
    "UnsupportedCharacterKind",
]


class AdelicError(Exception):
    """Base class for all errors raised by adelgamma."""


class PoleError(AdelicError, ValueError):
    """A test point sits on (or within the guard distance of) a pole."""


class PoleAtNonPositiveInteger(PoleError):
    pass


class PoleAtOne(PoleError):
    pass


class PoleGuardError(PoleError):
    """A denominator fell below the pole guard; the point is inconclusive."""


class AccuracyNotReachable(AdelicError, ArithmeticError):
    pass


class NonFiniteResult(AdelicError, ArithmeticError):
    pass


class ConstraintViolation(AdelicError, ValueError):
    pass


class NotSquarefree(AdelicError, ValueError):
    pass


class NotOneClass(AdelicError, ValueError):
    pass


class SolverExhausted(AdelicError, RuntimeError):
    pass


class InconsistentOrder(AdelicError, ValueError):
    pass


class ParityViolation(AdelicError, ValueError):
    pass


class TrivialityViolation(AdelicError, ValueError):
    pass


class UnsupportedCharacterKind(AdelicError, NotImplementedError):
    pass
