"""Exception hierarchy.

``ParseError`` signals malformed user input (CLI exit status 2); every other
subclass of ``UhfkError`` is a domain error (CLI exit status 1).
"""


class UhfkError(Exception):
    pass


class ParseError(UhfkError, ValueError):
    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


class DomainError(UhfkError):
    pass


class BudgetExceeded(DomainError):
    pass


class NotInGroup(DomainError):
    pass


class EmptyGSet(DomainError):
    pass


class NotInfiniteType(DomainError):
    pass


class FiniteTypeFiniteZ(DomainError):
    pass


class NonIntegralMultiplicity(DomainError):
    pass


class NegativeMultiplicity(DomainError):
    """Raised when an absorption certificate would need a negative multiplicity.

    The underlying argument rules this out, so seeing it means a bug.
    """


class CharacterTableError(DomainError):
    pass


class HomomorphismError(DomainError):
    pass
