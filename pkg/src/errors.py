"""Shared exception hierarchy"""

from typing import Optional


class AtLabError(Exception):
    """Base class for errors raised on purpose by AT-Lab"""
    pass


class PreconditionError(AtLabError):
    """An operation's stated precondition does not hold"""
    pass


class ResourceLimitError(AtLabError):
    """A configured budget would be exceeded"""

    def __init__(self, limit_name: str, limit: int, requested: int, hint: Optional[str] = None):
        self.limit_name = limit_name
        self.limit = limit
        self.requested = requested
        self.hint = hint
        message = f"{limit_name} exceeded: requested {requested}, limit {limit}"
        if hint:
            message += f" ({hint})"
        super().__init__(message)
