"""Exception hierarchy shared by every module in the package."""


class BicomplexError(Exception):
    """Base class for all library errors."""


class NotInvertible(BicomplexError, ArithmeticError):
    """Raised for zero divisors (and zero) where a unit is required."""


class NotPositive(BicomplexError, ValueError):
    """A hyperbolic number was expected to lie in the positive cone."""


class DomainError(BicomplexError, ValueError):
    """An argument lies outside the domain of the operation."""


class OutOfDomain(DomainError):
    """Series / integral representation used outside its convergence set."""


class ZeroInput(DomainError):
    """The operation is undefined at zero."""


class NotOnSphere(DomainError):
    """The argument does not lie on the unit D-sphere."""


class BadParameters(DomainError):
    """Invalid structural parameters (mesh sizes, radii, ...)."""


class PoleError(DomainError):
    """An idempotent component sits on a pole of a meromorphic function."""


class OnSingularSet(PoleError):
    """An idempotent component sits on the pole of zeta at 1."""


class NearPole(PoleError):
    """An idempotent component is closer to a pole than the guard distance."""


class QuadratureFailure(BicomplexError, RuntimeError):
    """The quadrature error estimate exceeded its budget."""


class ParseError(BicomplexError, ValueError):
    """Malformed literal text.

    ``position`` is the 0-based offset into the original string.
    """

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at offset {position}")
