"""Exception types shared across linkforge.

Every error carries a short machine-readable ``code`` so the CLI can emit it
in JSON reports and map it to an exit status.
"""

from __future__ import annotations


class LinkforgeError(Exception):
    code = "error"

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.code)
        self.details = details


class GraphError(LinkforgeError):
    code = "graph-error"


class UnknownEdge(GraphError):
    code = "unknown-edge"


class UnknownVertex(GraphError):
    code = "unknown-vertex"


class DegreeNot3(GraphError):
    code = "degree-not-3"


class NotATriangle(GraphError):
    code = "not-a-triangle"


class BudgetExceeded(LinkforgeError):
    """Base for searches that hit their configured cap."""

    code = "budget-exceeded"

    def __init__(self, message: str = "", budget: int | None = None, **details):
        super().__init__(message, budget=budget, **details)
        self.budget = budget


class CycleBudgetExceeded(BudgetExceeded):
    code = "cycle-budget-exceeded"


class SearchBudgetExceeded(BudgetExceeded):
    code = "search-budget-exceeded"


class DanglingReference(LinkforgeError):
    code = "dangling-reference"


class ConstructionError(LinkforgeError):
    code = "construction-error"


class OperandNotInFamily(ConstructionError):
    code = "operand-not-in-family"


class BadVertex(ConstructionError):
    code = "bad-vertex"


class BadEdge(ConstructionError):
    code = "bad-edge"


class RepeatedVertex(ConstructionError):
    code = "repeated-vertex"


class NonDisjointMatching(ConstructionError):
    code = "non-disjoint-matching"


class CriterionViolated(ConstructionError):
    code = "criterion-violated"


class EdgeOutsideBipartition(ConstructionError):
    code = "edge-outside-bipartition"


class SizeOutOfRange(ConstructionError):
    code = "size-out-of-range"


class UnknownName(LinkforgeError):
    code = "unknown-name"


class Unavailable(LinkforgeError):
    code = "unavailable"


class DiagramError(LinkforgeError):
    code = "diagram-error"


class OrphanCrossing(DiagramError):
    code = "orphan-crossing"


class DoubleOver(DiagramError):
    code = "double-over"


class UnorderedPassages(DiagramError):
    code = "unordered-passages"


class CyclesNotDisjoint(DiagramError):
    code = "cycles-not-disjoint"


class WrongUnderlyingGraph(DiagramError):
    code = "wrong-underlying-graph"
