"""Exception hierarchy.

Input problems derive from :class:`GraphInputError` (CLI exit code 2),
resource limits from :class:`ResourceCapError` (exit code 3).
"""


class KirchhoffError(Exception):
    """Base class for all errors raised by this package."""


class GraphInputError(KirchhoffError, ValueError):
    """The supplied graph is not a simple connected graph on >= 2 vertices."""


class SelfLoop(GraphInputError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"self-loop at vertex {vertex}")


class DuplicateEdge(GraphInputError):
    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"duplicate edge {edge[0]}-{edge[1]}")


class Disconnected(GraphInputError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"graph is disconnected: vertex {vertex} unreachable from vertex 0")


class TooFewVertices(GraphInputError):
    def __init__(self, count):
        self.count = count
        super().__init__(f"need at least 2 vertices, got {count}")


class VertexOutOfRange(GraphInputError):
    def __init__(self, vertex, count):
        self.vertex = vertex
        super().__init__(f"vertex id {vertex} outside [0, {count})")


class ParseError(GraphInputError):
    def __init__(self, message, line=None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class DimensionMismatch(KirchhoffError, ValueError):
    pass


class SingularSystem(KirchhoffError, ArithmeticError):
    """Regularized Laplacian could not be factored (graph likely disconnected)."""


class ZeroMultiplier(KirchhoffError, ArithmeticError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"recurrence multiplier f_{index} is zero")


class ResourceCapError(KirchhoffError):
    pass


class SizeOverflow(ResourceCapError, OverflowError):
    pass


class PrecisionPolicyError(ResourceCapError):
    """Exact rational backend refused: graph exceeds the configured order."""
