"""Exception hierarchy shared by all stirlingkit modules."""


class StirlingkitError(Exception):
    """Base class for library errors."""


class RowCapExceeded(StirlingkitError):
    """A triangle larger than the configured row cap was requested."""

    def __init__(self, n_max: int, cap: int):
        super().__init__(f"requested {n_max} rows but the row cap is {cap}")
        self.n_max = n_max
        self.cap = cap


class PrecisionError(StirlingkitError, ValueError):
    """A truncated series does not carry enough terms for the request."""


class SeriesDomainError(StirlingkitError, ValueError):
    """A series operation was applied outside its formal domain."""


class CoefficientParseError(StirlingkitError, ValueError):
    def __init__(self, token: str, position: int, reason: str = "not a rational"):
        super().__init__(f"cannot parse token {token!r} at position {position}: {reason}")
        self.token = token
        self.position = position
