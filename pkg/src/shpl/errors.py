"""Exception hierarchy shared by every module."""


class ShplError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class ParseError(ShplError):
    pass


class ShapeError(ShplError):
    pass


class FillingError(ShplError):
    """A filling violates a tableau condition; ``cell`` is 1-based (row, column)."""

    def __init__(self, message, cell=None):
        if cell is not None:
            message = f"cell {cell}: {message}"
        super().__init__(message)
        self.cell = cell


class CornerError(ShplError):
    pass


class SplitError(ShplError):
    pass


class HookError(ShplError):
    def __init__(self, message, row=None):
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
        self.row = row


class MaximalityError(HookError):
    pass


class BudgetError(ShplError):
    pass


class SizeError(ShplError):
    pass


class EmptyError(ShplError):
    pass


class InternalError(RuntimeError):
    """An algorithm invariant broke; this is a bug, not bad input."""
