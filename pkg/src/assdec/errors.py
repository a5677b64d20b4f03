"""Exception hierarchy shared across the toolkit."""


class AssDecError(Exception):
    """Base class for toolkit errors."""


class InvalidInputError(AssDecError, ValueError):
    """Malformed ideal, complex, graph or JSON payload."""


class InvalidIdealError(InvalidInputError):
    pass


class AmbientMismatchError(InvalidInputError):
    pass


class InvalidComplexError(InvalidInputError):
    pass


class ResourceLimitError(AssDecError):
    """A configured size cap was exceeded."""


class TheoremViolation(AssDecError):
    """A computed instance contradicts one of the implemented theorems.

    Raised instead of silently returning, so callers can tell a genuine
    counterexample (or a bug) apart from bad input.
    """
