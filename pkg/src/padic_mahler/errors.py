"""Exception hierarchy.

Every failure mode the CLI maps to a distinct exit code lives here, so
callers can distinguish "bad input text" from "precondition violated" from
"numerics refused to certify".
"""


class PadicMahlerError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(PadicMahlerError):
    """Polynomial text does not match the grammar.

    Carries the 0-based character position of the offending token.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DomainError(PadicMahlerError):
    """A mathematical precondition failed (non-prime p, arity mismatch,
    vanishing at a forbidden root of unity, undefined measure, ...)."""


class ZeroPolynomialError(DomainError):
    """An operation whose precondition excludes the zero polynomial got it."""


class HenselError(DomainError):
    """The strong Hensel condition v(f(a)) > 2 v(f'(a)) does not hold."""


class PrecisionError(PadicMahlerError):
    """Tracked precision is too low to certify any digit of the result."""


class ConvergenceError(PadicMahlerError):
    """An iterative procedure did not reach its certified target
    (root finder iteration cap, estimator stabilization, unstable fit)."""
