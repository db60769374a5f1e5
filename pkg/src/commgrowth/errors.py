class SizeCapExceeded(RuntimeError):
    """A computation would exceed its configured size cap."""


class BudgetExceeded(SizeCapExceeded):
    """An enumeration ran past its budget; ``partial`` holds what was finished."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
