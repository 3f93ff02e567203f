"""Exception hierarchy.

The CLI maps these onto exit codes: domain errors exit 2, missing
constants exit 3, numerical failures exit 4.
"""


class YamabeBoundsError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(YamabeBoundsError, ValueError):
    """An argument lies outside the domain of the requested quantity."""


class NotApplicableError(DomainError):
    """A bound formula is not valid for the given parameters."""


class MissingConstantError(YamabeBoundsError, LookupError):
    """A required external constant is absent from the registry."""

    def __init__(self, key, message=None):
        self.key = key
        super().__init__(message or f"no constant available for {key!r}")


class NumericalError(YamabeBoundsError, ArithmeticError):
    """A numerical routine failed to converge or produced a non-finite value."""


class QuadratureError(NumericalError):
    pass


class RootFindingError(NumericalError):
    pass


class EvaluationError(NumericalError):
    """An objective returned a non-finite value during minimization."""

    def __init__(self, c, value):
        self.c = c
        self.value = value
        super().__init__(f"objective is not finite at c={c!r} (got {value!r})")
