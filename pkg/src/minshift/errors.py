"""Exception hierarchy.

Every error raised by this package derives from MinshiftError so callers can
catch broadly.  The CLI maps the three leaf families onto distinct exit codes:
parse problems, verification failures, and exhausted computation budgets.
"""


class MinshiftError(Exception):
    """Base class for all package errors."""


class DomainError(MinshiftError):
    """An argument is outside the domain of the operation.

    Covers symbols outside the alphabet, words missing from a language
    table, and out-of-range lengths or depths.
    """


class RuleParseError(MinshiftError):
    """A substitution rules file or other textual input failed to parse."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = "line %d: %s" % (line_number, message)
        super().__init__(message)
        self.line_number = line_number


class ValidationError(MinshiftError):
    """A constructed object failed one of its structural checks.

    Raised when a language table violates factor-closure, when a claimed
    endomorphism maps a factor outside the language, or when a branch
    certificate does not replay.
    """


class BudgetError(MinshiftError):
    """A configured computation budget ran out before the result was exact.

    Carries the amount of budget consumed so reports can surface it.
    """

    def __init__(self, message, spent=None):
        super().__init__(message)
        self.spent = spent


class StabilizationError(BudgetError):
    """Language construction did not stabilize within the iteration cap."""
