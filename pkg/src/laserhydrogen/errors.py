"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid configuration input (unknown unit, bad range, malformed key)."""


class DomainError(ValueError):
    """Argument outside the mathematical or physical domain of an operation."""


class ConvergenceError(RuntimeError):
    """A series or iteration failed to converge within its cap.

    Carries partial diagnostics so callers can report what was attempted.
    """

    def __init__(self, message, *, iterations=None, last_term=None):
        super().__init__(message)
        self.iterations = iterations
        self.last_term = last_term
