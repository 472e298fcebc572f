"""Exception types raised across the package."""


class DualRSError(Exception):
    """Base class for all errors raised by dualrs."""


# field construction / arithmetic
class NotPrime(DualRSError, ValueError):
    pass


class ReducibleModulus(DualRSError, ValueError):
    pass


class NotPrimitive(DualRSError, ValueError):
    pass


class DivisionByZero(DualRSError, ZeroDivisionError):
    pass


class LogOfZero(DualRSError, ValueError):
    pass


# polynomials
class FieldMismatch(DualRSError, ValueError):
    pass


class NegativeShift(DualRSError, ValueError):
    pass


class LeadingCoeffOfZero(DualRSError, ValueError):
    pass


class DegreeTooLarge(DualRSError, ValueError):
    pass


class BothZero(DualRSError, ValueError):
    pass


# euclid
class NotMonic(DualRSError, ValueError):
    pass


class DegreeOrder(DualRSError, ValueError):
    pass


# codes / decoding
class LengthMismatch(DualRSError, ValueError):
    pass


class VariantMismatch(DualRSError, ValueError):
    pass


class SingularNormalization(DualRSError, ArithmeticError):
    """The Sugiyama locator has a zero constant term and cannot be normalized."""


class DerivativeZero(DualRSError, ArithmeticError):
    """The locator derivative vanishes at a root (repeated root)."""
