"""Exception types shared across the package."""


class InputError(ValueError):
    """Caller supplied something outside a function's domain."""


class InternalError(RuntimeError):
    """An invariant that should always hold was violated.

    Raised instead of returning a wrong answer, e.g. when two
    independent routes for the same quantity disagree.
    """
