"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain on which a result is defined."""


class NonConvergenceError(RuntimeError):
    """A series did not reach the requested tolerance within the term cap."""
