"""Shared exception types."""


class SearchBudgetExceeded(RuntimeError):
    """A bounded search ran out of its node budget before reaching a verdict.

    `partial` carries whatever intermediate result is meaningful for the
    operation that gave up (e.g. counts computed so far, best chain found).
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
