"""Exception types shared across the package."""


class WeightedHanoiError(Exception):
    """Base class for solver-level failures."""


class UnsolvableError(WeightedHanoiError):
    """The requested transfer has no finite-cost solution."""


class InfiniteWeightError(WeightedHanoiError):
    """A pure-regime closed form met a forbidden (infinite-weight) move."""


class IllegalMoveError(WeightedHanoiError):
    """A move plan violates the stacking rules.

    Carries the zero-based index of the offending step.
    """

    def __init__(self, step: int, message: str):
        super().__init__(f"step {step}: {message}")
        self.step = step


class PlanSizeError(WeightedHanoiError):
    """A materialized plan would exceed the configured move cap."""


class OracleCapError(WeightedHanoiError):
    """A brute-force query exceeds the configured disc cap."""


class UnboundedCountError(WeightedHanoiError):
    """A zero-cost move lies on an optimal route, so the number of
    minimum-cost move sequences is infinite."""
