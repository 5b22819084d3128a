"""Exception hierarchy shared by every module."""


class ExtordError(Exception):
    pass


class GraphError(ExtordError, ValueError):
    """A (di)graph violates the simple-structure invariants."""


class ParseError(GraphError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class DomainError(ExtordError, ValueError):
    """An operation was called outside its precondition."""


class CapacityError(ExtordError):
    """A configured size limit would be exceeded."""


class DefectError(ExtordError, RuntimeError):
    """Two routes that must agree did not; indicates a bug or a bad reconstruction."""
