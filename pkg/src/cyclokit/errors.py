"""Exception hierarchy shared by all modules."""


class CyclokitError(Exception):
    pass


class DomainError(CyclokitError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class RangeError(CyclokitError, ValueError):
    """A requested point exceeds what a precomputed table covers."""


class ResourceError(CyclokitError, RuntimeError):
    """The request exceeds the configured memory budget."""
