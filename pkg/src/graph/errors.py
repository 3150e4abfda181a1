"""Exception types raised by the graph, metric and construction layers."""


class GraphStructureError(ValueError):
    """Invalid graph construction or vertex id (range, parallel edge, loop)."""


class DisconnectedGraphError(ValueError):
    """Operation needs a (strongly) connected input."""


class PreconditionError(ValueError):
    """A documented precondition of an operation does not hold."""


class SizeCapExceededError(RuntimeError):
    """Exact search requested on more vertices than the configured cap."""


class VerificationError(RuntimeError):
    """A constructed landmark set failed re-verification."""
