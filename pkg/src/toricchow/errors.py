"""Exception hierarchy shared by every module of the package."""


class ToricError(Exception):
    """Base class for all errors raised by toricchow."""


class ValidationError(ToricError, ValueError):
    """Input describes an invalid cone or fan."""


class ZeroVector(ValidationError):
    pass


class NotStronglyConvex(ValidationError):
    pass


class ConeTooLarge(ValidationError):
    """Cone exceeds the limits of brute-force double description."""


class InvalidFan(ValidationError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class ParseError(ToricError, ValueError):
    def __init__(self, message, line=None, field=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.line = line
        self.field = field


class NotAFacetPair(ToricError, ValueError):
    pass


class DegreeOutOfRange(ToricError, ValueError):
    pass


class DegreeMismatch(ToricError, ValueError):
    pass


class FanNotComplete(ToricError):
    pass


class NotAffine(ToricError):
    pass


class GenericityFailure(ToricError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class UncertifiedDisplacement(ToricError, ValueError):
    pass


class InternalNonTransversePair(ToricError, RuntimeError):
    """A certified displacement produced a non-transverse pair; this is a bug."""


class BalancingViolation(ToricError, RuntimeError):
    """A computed weight failed the balancing condition; this is a bug."""
