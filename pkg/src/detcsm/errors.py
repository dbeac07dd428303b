"""Exception types shared by all modules."""


class UsageError(ValueError):
    """Invalid parameters or malformed input (CLI exit code 2)."""


class ConsistencyError(ArithmeticError):
    """An internal cross-check failed (CLI exit code 3)."""
