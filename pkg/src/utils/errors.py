class MutantError(Exception):
    """Base class for every error raised by the mutant package."""


class DomainError(MutantError, ValueError):
    """A mathematical precondition does not hold for the given input."""


class NotSignSkewSymmetricError(DomainError):
    pass


class NotSkewSymmetrizableError(DomainError):
    pass


class RealizabilityError(DomainError):
    """Diagram mutation needs the square root of a non-square product."""


class InexactDivisionError(DomainError):
    """The exchange relation right-hand side is not divisible by the old variable."""


class InconsistentExchangeError(DomainError):
    pass


class IndeterminateError(DomainError):
    """A capped search stopped before it could decide the question."""


class InputError(MutantError, ValueError):
    """Malformed input file, JSON document or flag value."""
