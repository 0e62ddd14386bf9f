"""Exception hierarchy shared by all modules."""


class GraphError(ValueError):
    """Invalid graph, or a graph outside an operation's supported class."""


class DisconnectedGraphError(GraphError):
    """Raised where distances are needed but the graph is not connected."""


class Graph6Error(GraphError):
    """Malformed graph6 input."""


class DomainError(ValueError):
    """Parameters outside the domain where a formula or family is defined."""


class TransformError(GraphError):
    """Transform preconditions not met."""
