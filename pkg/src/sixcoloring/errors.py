"""Exception types shared across the package."""


class DomainError(ValueError):
    """A formula argument left its domain or a construction degenerated."""


class RangeError(ValueError):
    """A parameter lies outside its documented range."""


class ConvergenceError(RuntimeError):
    """A root bracket or iteration failed to converge."""


class InvalidTilingError(ValueError):
    """A tiling violates its partition invariants."""
