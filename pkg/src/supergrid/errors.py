"""Exception types raised by the supergrid library."""

from __future__ import annotations


class SupergridError(Exception):
    """Base class for all library-specific errors."""


class VertexNotInGraph(SupergridError):
    """A queried vertex is not part of the graph."""


class NoInsertionEdge(SupergridError):
    """No cycle edge has both endpoints adjacent to the vertex to insert."""


class NoConcatenationEdge(SupergridError):
    """No cycle edge can absorb the path's two endpoints."""


class NoBridgeEdges(SupergridError):
    """No pair of cycle edges bridges the two cycles."""


class NoSharedVertex(SupergridError):
    """The two cycles do not share exactly one vertex."""


class NoPivotEdge(SupergridError):
    """No adjacent pair of edges flanks the shared vertex."""


class PreconditionViolated(SupergridError):
    """A required structural predicate does not hold.

    ``predicate`` names the first predicate that failed.
    """

    def __init__(self, predicate: str, message: str | None = None):
        self.predicate = predicate
        super().__init__(message or f"precondition failed: {predicate}")


class AlreadyHamiltonian(SupergridError):
    """The cycle already covers every vertex of the graph."""


class ExtensionStuck(SupergridError):
    """No extension rule applies; carries the stuck-state witness."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__("cycle extension is stuck")


class BoxTooLarge(SupergridError):
    """Exhaustive enumeration box exceeds the hard cell cap."""


class GenerationBudgetExhausted(SupergridError):
    """Randomized generation could not satisfy the requested predicates."""


class SizeBoundExceeded(SupergridError):
    """Graph is larger than the brute-force search bound."""


class InvalidCharacter(SupergridError):
    """Lattice text contains a character outside the format alphabet."""

    def __init__(self, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"invalid character at line {line}, column {column}")


class CycleFormatError(SupergridError):
    """Cycle listing text is malformed or violates cycle invariants."""
