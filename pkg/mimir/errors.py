"""
Exceptions raised by the mimir library.

Validators are report-valued; these are raised only when an operation cannot
run at all (bad input, violated precondition, size guard).
"""


class GroupoidError(ValueError):
    """Base class for mathematical input errors."""


class MalformedSpecError(GroupoidError):
    """A constructor description or raw table is malformed."""


class NotAFunctorError(GroupoidError):
    """A pair of maps fails the functor laws where a functor is required."""


class PreconditionError(GroupoidError):
    """An operation was called outside its documented precondition."""


class QuotientError(GroupoidError):
    """Double-coset composition depends on the chosen representatives."""

    def __init__(self, message: str = "quotient not well-defined"):
        super().__init__(message)


class NotAMeromorphismError(GroupoidError):
    """A fraction fails one of the meromorphism conditions."""


class SizeGuardError(RuntimeError):
    """A search or construction exceeded its configured cap."""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"search refused: {what} has {size} arrows, cap is {cap}")


def guard(what: str, size: int, cap: int):
    """Raise SizeGuardError when size exceeds cap."""
    if size > cap:
        raise SizeGuardError(what, size, cap)
