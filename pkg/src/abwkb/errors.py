"""Shared exception types."""


class ConvergenceError(RuntimeError):
    """An iterative numeric procedure failed to converge within its budget."""
