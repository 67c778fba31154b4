"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: ValidationError -> 2,
InvariantError -> 3, BoundExceededError -> 4.
"""


class IsotypicError(Exception):
    pass


class ValidationError(IsotypicError):
    """Malformed or inconsistent input data (bad table, bad field, bad file)."""


class InvariantError(IsotypicError):
    """A mathematical identity that must hold exactly failed."""


class BoundExceededError(IsotypicError):
    """A configured resource bound (group size, coset ceiling, ...) was hit."""
