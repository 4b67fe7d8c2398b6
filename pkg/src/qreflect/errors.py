"""Exception hierarchy shared by every layer of the engine."""


class QReflectError(Exception):
    """Base class for all engine errors."""


class DivisionByZero(QReflectError, ZeroDivisionError):
    pass


class PoleAtPoint(QReflectError, ZeroDivisionError):
    """A denominator vanished while evaluating at an exact sample point."""


class UnboundVariable(QReflectError, KeyError):
    pass


class DegreeLimitExceeded(QReflectError):
    """An intermediate rational function grew beyond the configured degree guard."""


class ParseError(QReflectError, ValueError):
    pass


class LegMismatch(QReflectError, ValueError):
    pass


class SingularMatrix(QReflectError):
    def __init__(self, message, determinant=None):
        super().__init__(message)
        self.determinant = determinant


class SingularCoefficientMatrix(SingularMatrix):
    """Exchange-rule derivation hit a non-invertible coefficient system."""


class MissingRule(QReflectError):
    def __init__(self, left, right):
        super().__init__(f"no exchange rule for adjacent pair {left} {right}")
        self.pair = (left, right)


class StepLimitExceeded(QReflectError):
    pass


class MissingRealization(QReflectError, KeyError):
    pass


class SamplerExhausted(QReflectError):
    pass


class InconsistentRelation(QReflectError):
    """A quadratic relation implied an extra constraint among normal-ordered words."""


class ConfigError(QReflectError, ValueError):
    pass


class NonConfluent(QReflectError):
    def __init__(self, witness):
        super().__init__(f"reduction orders disagree on {witness}")
        self.witness = witness
