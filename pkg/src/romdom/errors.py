"""Exception types shared across the package."""


class RomdomError(Exception):
    """Base class for errors raised by this package."""


class ParameterError(RomdomError, ValueError):
    """A graph, family, or function argument is malformed."""


class CapacityError(RomdomError):
    """A size guard was exceeded: graph width, product size, or enumeration bound."""


class Graph6Error(RomdomError, ValueError):
    """A graph6 line failed to parse.

    ``offset`` is the byte position of the problem, counted from the start of
    the graph6 payload (after any ``>>graph6<<`` prefix).
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class BudgetExceeded(RomdomError):
    """A solver ran past its node budget before finishing."""

    def __init__(self, nodes: int):
        super().__init__(f"node budget exhausted after {nodes} nodes")
        self.nodes = nodes
