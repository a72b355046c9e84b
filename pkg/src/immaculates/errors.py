"""Exception types shared across the package."""


class LengthMismatchError(ValueError):
    """Paired sequences must have equal length."""


class DimensionCapError(ValueError):
    """Exact expansion refused above the configured dimension cap."""


class GreedyPreconditionError(ValueError):
    """Row conditions for the zero-capturing term construction were violated."""
