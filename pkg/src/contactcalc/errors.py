"""Shared exception types."""


class ContactCalcError(Exception):
    """Base class for all library errors."""


class ChartMismatchError(ContactCalcError):
    """A form/field was evaluated at a point of a different chart."""


class DomainError(ContactCalcError):
    """A point lies outside the declared domain of a chart or form."""


class IllConditionedError(ContactCalcError):
    """A linear solve was refused because the system is too ill-conditioned."""

    def __init__(self, message: str, condition_number: float):
        super().__init__(message)
        self.condition_number = condition_number


class DegenerateSystemError(ContactCalcError):
    """A defining linear system has no solution within tolerance."""
