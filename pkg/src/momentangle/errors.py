"""Exception types shared across the package."""


class ParseError(ValueError):
    """Raised when an input description of a complex is malformed."""


class CompositionError(RuntimeError):
    """Raised when two maps that must compose to zero fail to do so.

    This always signals a sign-convention bug upstream, never bad user input.
    """


class InvariantViolation(RuntimeError):
    """Raised when an internally constructed object fails its own contract."""
