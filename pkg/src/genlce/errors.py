"""Exception types shared by every backend."""


class UsageError(Exception):
    """An operation was invoked outside its contract (wrong mode, bad config)."""
