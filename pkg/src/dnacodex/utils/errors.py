"""Exception types shared across dnacodex."""


class DnaCodexError(Exception):
    """Base class for every error raised by dnacodex."""


class RefusedConstruction(DnaCodexError):
    """A domain precondition does not hold (even length, m out of range, ...).

    The message carries the reason and is shown to the user verbatim.
    """


class FieldRangeError(RefusedConstruction):
    """Requested GF(2^m) lies outside the built-in primitive polynomial table."""


class BudgetExceeded(DnaCodexError):
    """An exhaustive enumeration would exceed the configured log2 budget."""

    def __init__(self, what: str, log2_size: int, budget: int):
        self.what = what
        self.log2_size = log2_size
        self.budget = budget
        super().__init__(
            f"{what} has 2^{log2_size} elements, above the enumeration budget 2^{budget}"
        )


class PolynomialParseError(DnaCodexError, ValueError):
    """Polynomial text is neither hex nor a sum of x^k terms."""
