"""Exception types shared across the package."""


class EoramError(Exception):
    """Base class for all errors raised by eoram."""


class LimitExceeded(EoramError):
    """A brute-force routine was asked for an instance above its size limit."""


class CapExceeded(EoramError):
    """An enumeration produced more objects than its configured cap."""


class InvalidBase(EoramError):
    pass


class InvalidInstance(EoramError):
    pass


class NotLexicographic(EoramError):
    pass


class NotDivisible(EoramError):
    pass


class EmptySample(EoramError):
    pass


class DimensionMismatch(EoramError):
    pass


class NotAnEdge(EoramError):
    pass


class NotMonochromaticWord(EoramError):
    pass
