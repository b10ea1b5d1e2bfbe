"""Exception types shared across the package."""


class CliffGraphError(Exception):
    """Base class for all cliffgraph errors."""


class ParameterError(CliffGraphError):
    """An argument violates a documented constraint."""


class CapacityError(CliffGraphError):
    """An input exceeds a hard size bound (vertex caps, census range)."""


class AmbientMismatchError(CliffGraphError):
    """Operands belong to different ambient algebras or exceed the ambient size."""


class Graph6Error(CliffGraphError):
    """Malformed graph6 input; carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
