"""Exception types shared across the package."""


class GraphError(ValueError):
    """Structurally invalid graph, partition or edge set."""


class ParseError(GraphError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class NotConnectedError(GraphError):
    pass


class CapExceededError(ValueError):
    """An enumeration would exceed its configured size cap."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} too large: {size} exceeds cap {cap}")


class UndefinedError(ValueError):
    """The requested invariant is not defined for this input."""


class NotMultilinearError(ArithmeticError):
    """A product would repeat a variable, leaving the squarefree ring."""
