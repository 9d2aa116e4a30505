"""Exception hierarchy shared by every module of the package."""


class MolPerceptionError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(MolPerceptionError, ValueError):
    """An argument lies outside the domain of the operation."""


class AlphabetError(DomainError):
    """A symbol is not part of the relevant alphabet."""


class CatalogError(DomainError, KeyError):
    """Unknown catalog machine."""

    def __str__(self):
        return Exception.__str__(self)


class PreconditionError(DomainError):
    """An operation was called on an object of the wrong shape."""


class PerceptionUndefinedError(DomainError):
    """The enzyme perception map has no value for the requested pair."""


class NotAPerceptionReactionError(DomainError):
    """The automaton is not a member of the perception-based reaction class."""


class FormatError(MolPerceptionError, ValueError):
    """A serialized document does not follow the expected schema."""
