"""Exception hierarchy shared by all modules."""


class EICycleError(Exception):
    pass


class InvalidParameter(EICycleError, ValueError):
    pass


class OutOfRange(EICycleError, ValueError):
    pass


class DegenerateInput(EICycleError, ValueError):
    pass


class InternalConsistencyError(EICycleError, RuntimeError):
    """A construction produced something its own invariants forbid."""


class ParseError(EICycleError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
