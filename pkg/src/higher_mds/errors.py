class PreconditionError(ValueError):
    """Input violates an operation's stated precondition.

    ``violating`` carries the offending object (a subset of indices, a
    partition, ...) when one is available.
    """

    def __init__(self, message: str, violating=None):
        super().__init__(message)
        self.violating = violating


class CapacityError(ValueError):
    """Instance exceeds an engine's enumeration cap (e.g. too many sets)."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search would exceed the caller-supplied budget."""
