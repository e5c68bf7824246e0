"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed input: unknown vertex ids, loops, violated preconditions."""


class InternalError(RuntimeError):
    """An internal consistency check failed (a bug, not bad input)."""
