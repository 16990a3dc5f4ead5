"""Exception types raised across the package."""


class NihoSpecError(Exception):
    """Base class for every error raised by nihospec."""


class NotPrime(NihoSpecError, ValueError):
    pass


class TooLarge(NihoSpecError):
    """Requested work exceeds the field-size cap or the operation budget."""


class ConstructionFailure(NihoSpecError, RuntimeError):
    pass


class ZeroElement(NihoSpecError, ValueError):
    pass


class BadOrder(NihoSpecError, ValueError):
    pass


class BadExponent(NihoSpecError, ValueError):
    pass


class NonIntegralRatio(NihoSpecError, ArithmeticError):
    pass


class OddCharacteristic(NihoSpecError, ValueError):
    pass


class WrongCharacteristic(NihoSpecError, ValueError):
    pass


class FieldMismatch(NihoSpecError, ValueError):
    pass


class IndexRange(NihoSpecError, ValueError):
    pass


class HypothesisViolated(NihoSpecError, ValueError):
    pass
