"""Exception hierarchy shared by all modules."""


class DrinfeldHeckeError(Exception):
    """Base class for every error raised by the library."""


class NonPrimeCharacteristic(DrinfeldHeckeError, ValueError):
    pass


class NoIrreducibleFound(DrinfeldHeckeError):
    pass


class FieldTooLarge(DrinfeldHeckeError, ValueError):
    pass


class DegreeTooLarge(DrinfeldHeckeError, ValueError):
    pass


class ContextMismatch(DrinfeldHeckeError, ValueError):
    """Operands live in different working fields."""


class InversionOfZero(DrinfeldHeckeError, ZeroDivisionError):
    pass


class PrecisionExhausted(DrinfeldHeckeError):
    """A result window became empty."""


class RamificationNotDivisible(DrinfeldHeckeError, ValueError):
    pass


class NoStabilization(DrinfeldHeckeError):
    """An adaptive truncation did not settle within its budget."""


class NotConverged(NoStabilization):
    pass


class EnumerationBudgetExceeded(DrinfeldHeckeError):
    pass


class TailNotDecaying(DrinfeldHeckeError):
    pass


class SpaceTooLarge(EnumerationBudgetExceeded):
    pass


class PoleHit(DrinfeldHeckeError, ZeroDivisionError):
    pass


class CollidingValuations(DrinfeldHeckeError, ValueError):
    pass


class SingularMatrix(DrinfeldHeckeError, ValueError):
    pass


class VanishingJ(DrinfeldHeckeError):
    pass


class DepthTooSmall(DrinfeldHeckeError, ValueError):
    pass


class OutsideUnitDisk(DrinfeldHeckeError):
    """Substituting a point with |t| > 1 into a truncated t-series."""


class NotIrreducible(DrinfeldHeckeError, ValueError):
    pass


class NotMonic(DrinfeldHeckeError, ValueError):
    pass


class NonPolynomialInverse(DrinfeldHeckeError, ValueError):
    pass


class IdentityViolation(DrinfeldHeckeError):
    """Two routes to the same quantity disagree beyond the threshold."""


class ConfigInvalid(DrinfeldHeckeError, ValueError):
    pass
