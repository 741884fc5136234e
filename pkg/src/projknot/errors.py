class DiagramError(Exception):
    """Base class for problems with a diagram or its derived data."""


class ParseError(DiagramError):
    """Malformed PLD text. Carries 1-based line and column when known."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class ValidationError(DiagramError):
    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class PreconditionError(ValueError):
    """An operation was called on input outside its domain."""
