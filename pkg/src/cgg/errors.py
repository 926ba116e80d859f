"""Exception hierarchy shared by every module in the package."""


class CGGError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(CGGError):
    """A value or combination of values violates an operation's contract."""


class BudgetExceededError(CGGError):
    """A resource guard (size limit or search-node budget) was exceeded."""
