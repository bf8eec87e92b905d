"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the set where the quantity is defined."""


class UnclassifiedError(DomainError):
    """Stability is not decided at the critical frequency itself."""


class ConvergenceError(RuntimeError):
    """A numerical procedure could not reach its requested accuracy."""


class BracketError(ConvergenceError):
    """No sign change could be found to bracket a root."""
