"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class RainbowError(Exception):
    exit_code = 1


class DomainError(RainbowError, ValueError):
    """Input outside the domain of an operation (bad parameters, wrong graph class)."""

    exit_code = 1


class CapacityError(RainbowError):
    """Instance too large for an exponential routine's configured budget."""

    exit_code = 2


class ParseError(RainbowError, ValueError):
    exit_code = 3

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
