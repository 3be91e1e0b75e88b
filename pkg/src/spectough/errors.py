"""Exception types shared across the package."""


class SpectoughError(Exception):
    """Base class for all library errors."""


class InvalidArgument(SpectoughError, ValueError):
    pass


class ParseError(SpectoughError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotConnectedError(SpectoughError, ValueError):
    def __init__(self, u: int, v: int):
        self.u, self.v = u, v
        super().__init__(f"graph is not connected: no path between {u} and {v}")


class ToughnessUndefinedError(SpectoughError, ValueError):
    pass


class SizeGuardError(SpectoughError):
    pass


class NumericFailure(SpectoughError, ArithmeticError):
    pass
