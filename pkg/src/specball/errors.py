"""Exception types shared across the package."""


class SpecballError(Exception):
    """Base class for all errors raised by specball."""


class DomainError(SpecballError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class ZeroPolynomial(DomainError):
    pass


class NotMonic(DomainError):
    pass


class OutsideDisc(DomainError):
    pass


class NotInBall(DomainError):
    """A matrix has spectral radius >= 1."""

    def __init__(self, message, radius=None):
        super().__init__(message)
        self.radius = radius


class NonConvergence(SpecballError, ArithmeticError):
    pass


class RankAmbiguity(SpecballError, ArithmeticError):
    """A numerical rank decision fell too close to its threshold."""

    def __init__(self, message, eigenvalue=None):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class SingularFactor(SpecballError, ArithmeticError):
    pass


class LineImage(DomainError):
    """The image of the unit circle under a Mobius map is a line."""


class DenominatorVanishes(SpecballError, ZeroDivisionError):
    def __init__(self, message, z=None, stage=None):
        super().__init__(message)
        self.z = z
        self.stage = stage


class DegenerateDraw(SpecballError, RuntimeError):
    pass


class DatasetError(DomainError):
    """Invalid interpolation data; ``node`` is the offending node index, if any."""

    def __init__(self, message, node=None):
        super().__init__(message)
        self.node = node
