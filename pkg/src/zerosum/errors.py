class BudgetExceededError(RuntimeError):
    """Raised when a search or enumeration would exceed its configured budget."""


class InvariantViolation(RuntimeError):
    """An internal consistency check (e.g. the complement identity) failed."""
