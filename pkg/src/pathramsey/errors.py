"""Exception types shared across the package."""


class CapabilityError(RuntimeError):
    """An exact computation was asked to go beyond its configured limits.

    Raised instead of returning a possibly wrong answer.
    """


class InternalInvariantError(AssertionError):
    """A branch that a correct implementation can never reach was reached."""


class PreconditionError(ValueError):
    """Inputs do not satisfy an operation's stated precondition."""
