"""Exception hierarchy shared by the whole package.

The CLI maps these onto exit codes, so raising the right class matters:
InputFormatError -> 2, PreconditionError -> 3, BudgetError -> 4,
InternalContradictionError -> 5.
"""


class ParhomError(Exception):
    """Base class for all package errors."""


class InputFormatError(ParhomError):
    """Malformed input text (edge lists, pin files, gadget records)."""


class PreconditionError(ParhomError):
    """An operation was called outside its stated precondition."""


class BudgetError(ParhomError):
    """A configured search/counting budget was exceeded."""


class InternalContradictionError(ParhomError):
    """A construction that is guaranteed to succeed failed verification.

    Reaching this always indicates a bug, never bad input.
    """
