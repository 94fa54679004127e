"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class SpecError(DomainError):
    """A group description violates the invariants of its shape."""


class ParseError(ValueError):
    """Malformed group-description text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class LimitExceeded(RuntimeError):
    """A brute-force computation would exceed its configured size limit."""


class LiftError(RuntimeError):
    """A lifted matrix action failed re-verification."""


class RealizationError(RuntimeError):
    """No matrix realization was found at any probed dimension and prime."""
