"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain where a formula is defined."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class SingularInputError(DomainError):
    """The formula has a removable or genuine singularity at this input."""


class DivergenceError(ArithmeticError):
    """The requested integral diverges (e.g. K(1))."""


class NumericalFailure(ArithmeticError):
    """A numerical procedure could not produce a result meeting its tolerance."""
