class DomainError(ValueError):
    """An argument lies outside the set on which a map or bound is defined."""


class PreconditionError(DomainError):
    """Arguments are valid points but violate an ordering the caller must ensure."""
