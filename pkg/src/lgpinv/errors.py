"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class GraphError(Exception):
    """Base class for domain errors raised by lgpinv."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class MissingEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class DegreeViolation(GraphError):
    pass


class AdjacentEndpoints(GraphError):
    pass


class NonIsolatedVertex(GraphError):
    pass


class MalformedHeader(GraphError):
    pass


class NotALineGraph(GraphError):
    """Raised when a graph admits no Krausz partition.

    ``witness`` holds the vertex set of an obstruction (an induced claw when
    one exists, otherwise the vertices touched by the edge where the
    partition search gave up).
    """

    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        super().__init__(message)
        self.witness = witness


class EmptyGraph(GraphError):
    pass


class NoConvergence(GraphError):
    pass


class Disconnected(GraphError):
    pass


class SmithGraphExcluded(GraphError):
    pass


class UnknownCase(GraphError):
    pass


class BudgetExhausted(GraphError):
    def __init__(self, k_max: int):
        super().__init__(f"no line graph within {k_max} flips")
        self.k_max = k_max


class TimeLimit(GraphError):
    """Branch-and-bound ran out of time; ``incumbent`` is the best solution found."""

    def __init__(self, message: str, incumbent=None):
        super().__init__(message)
        self.incumbent = incumbent


class InconsistentInputs(GraphError):
    pass


class ParameterError(GraphError):
    pass


class RejectionBudgetExhausted(GraphError):
    pass


class NotEnoughNonEdges(GraphError):
    pass


class EmptyGadget(GraphError):
    pass
