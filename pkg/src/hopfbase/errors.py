"""Exception hierarchy shared by every module of the engine."""


class AlgebraError(Exception):
    """Base class for all engine errors."""


class DegenerateScalar(AlgebraError, ZeroDivisionError):
    pass


class OrderMismatch(AlgebraError, ValueError):
    pass


class ScalarParseError(AlgebraError, ValueError):
    pass


class NonAbelianInput(AlgebraError, ValueError):
    pass


class InvalidGroup(AlgebraError, ValueError):
    pass


class SizeLimit(AlgebraError):
    pass


class ShapeMismatch(AlgebraError, ValueError):
    pass


class NotGrouplike(AlgebraError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UndeclaredCoradical(AlgebraError):
    def __init__(self, message, coradical_dim=None, declared=None):
        super().__init__(message)
        self.coradical_dim = coradical_dim
        self.declared = declared


class ClosureFailure(AlgebraError):
    pass


class SingularComatrix(AlgebraError):
    pass


class NegativeExponent(AlgebraError, ValueError):
    pass


class NonInvertibleDenominator(AlgebraError):
    pass


class DenominatorNotTrivializable(AlgebraError):
    pass


class MissingAdaptedBasis(AlgebraError):
    pass


class GammaInvalid(AlgebraError):
    def __init__(self, message, failures=()):
        super().__init__(message)
        self.failures = list(failures)


class HypothesisNotMet(AlgebraError, ValueError):
    pass


class InputError(AlgebraError, ValueError):
    """Malformed JSON input; ``field`` names the offending location."""

    def __init__(self, message, field=None):
        if field:
            message = "%s: %s" % (field, message)
        super().__init__(message)
        self.field = field
