"""Exception hierarchy shared by every module of the package."""


class STransformError(Exception):
    """Base class for all errors raised by stransform."""


class InvalidParameter(STransformError, ValueError):
    """Inputs violate an operation's preconditions."""


class ModulusMismatch(InvalidParameter):
    pass


class NotInvertible(STransformError, ArithmeticError):
    pass


class TheoremViolation(STransformError, ArithmeticError):
    """Two sides of an identity that should agree were computed and differ."""


class ConsistencyViolation(TheoremViolation):
    pass


class OrderMismatch(InvalidParameter):
    pass


class ExistenceConditionFailed(InvalidParameter):
    def __init__(self, d: int, value: int | None = None):
        self.d = d
        self.value = value
        msg = f"existence condition fails at offset d={d}"
        if value is not None:
            msg += f" (sum = {value})"
        super().__init__(msg)


class LengthMismatch(InvalidParameter):
    pass


class NoPlanFound(STransformError, LookupError):
    pass


class WrongRegime(InvalidParameter):
    pass


class ZeroModulus(InvalidParameter, ZeroDivisionError):
    pass


class ComponentOutOfRange(InvalidParameter):
    pass
