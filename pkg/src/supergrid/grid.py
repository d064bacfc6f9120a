"""Integer-lattice points and supergrid graphs with implicit 8-neighborhood.

A supergrid graph is a finite set of lattice points; two points are adjacent
exactly when they differ by at most 1 in each coordinate (king moves).  Edges
are never materialized: every adjacency query goes through point arithmetic
and set membership, which keeps graphs cheap to build, copy and transform.

The y axis grows downward ("up" is y-1), matching the lattice-text and SVG
orientation used by :mod:`supergrid.lattice_io`.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .errors import VertexNotInGraph

# Coordinates are plain machine integers; behaviour is only guaranteed for
# |coordinate| <= 2**30 (documented contract limit, not enforced per call).
MAX_COORD = 1 << 30


@functools.total_ordering
@dataclass(frozen=True, slots=True)
class Point:
    """Lattice point; equality is coordinate equality, order is (y, x) lex."""

    x: int
    y: int

    def key(self) -> tuple[int, int]:
        """Sort key realizing the total (y, then x) order."""
        return (self.y, self.x)

    def __lt__(self, other: "Point") -> bool:
        return (self.y, self.x) < (other.y, other.x)

    def translate(self, dx: int, dy: int) -> "Point":
        return Point(self.x + dx, self.y + dy)

    def __repr__(self) -> str:
        return f"({self.x},{self.y})"


class Direction(Enum):
    """The eight neighbor offsets, in the fixed scan order UL..DR."""

    UL = (-1, -1)
    U = (0, -1)
    UR = (1, -1)
    L = (-1, 0)
    R = (1, 0)
    DL = (-1, 1)
    D = (0, 1)
    DR = (1, 1)

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]

    def opposite(self) -> "Direction":
        return _OPPOSITE[self]

    def apply(self, p: Point) -> Point:
        return Point(p.x + self.value[0], p.y + self.value[1])


_OPPOSITE = {
    Direction.UL: Direction.DR,
    Direction.U: Direction.D,
    Direction.UR: Direction.DL,
    Direction.L: Direction.R,
    Direction.R: Direction.L,
    Direction.DL: Direction.UR,
    Direction.D: Direction.U,
    Direction.DR: Direction.UL,
}

# Offset tuples in Direction order; used by hot loops to avoid enum overhead.
OFFSETS: tuple[tuple[int, int], ...] = tuple(d.value for d in Direction)


def adjacent(u: Point, v: Point) -> bool:
    """True iff u and v are distinct and differ by at most 1 in x and in y."""
    if u.x == v.x and u.y == v.y:
        return False
    return abs(u.x - v.x) <= 1 and abs(u.y - v.y) <= 1


class SupergridGraph:
    """Immutable finite vertex set with implicit 8-neighborhood adjacency."""

    __slots__ = ("_vertices", "_sorted", "_bbox")

    def __init__(self, vertices: Iterable[Point]):
        self._vertices = frozenset(vertices)
        self._sorted: tuple[Point, ...] | None = None
        self._bbox: tuple[int, int, int, int] | None = None

    @property
    def vertices(self) -> frozenset[Point]:
        return self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, p: Point) -> bool:
        return p in self._vertices

    def __iter__(self) -> Iterator[Point]:
        return iter(self.sorted_vertices())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SupergridGraph):
            return NotImplemented
        return self._vertices == other._vertices

    def __hash__(self) -> int:
        return hash(self._vertices)

    def __repr__(self) -> str:
        return f"SupergridGraph({list(self.sorted_vertices())!r})"

    def sorted_vertices(self) -> tuple[Point, ...]:
        """Vertices in (y, x) lexicographic order; cached."""
        if self._sorted is None:
            self._sorted = tuple(sorted(self._vertices, key=Point.key))
        return self._sorted

    def bounding_box(self) -> tuple[int, int, int, int] | None:
        """(min_x, min_y, max_x, max_y), or None for the empty graph."""
        if not self._vertices:
            return None
        if self._bbox is None:
            xs = [p.x for p in self._vertices]
            ys = [p.y for p in self._vertices]
            self._bbox = (min(xs), min(ys), max(xs), max(ys))
        return self._bbox

    def degree(self, v: Point) -> int:
        return len(neighbors(self, v))

    def translate(self, dx: int, dy: int) -> "SupergridGraph":
        return SupergridGraph(Point(p.x + dx, p.y + dy) for p in self._vertices)


def from_points(points: Iterable[Point]) -> SupergridGraph:
    """Build a graph from points, deduplicating; empty input is allowed."""
    return SupergridGraph(points)


def neighbors(g: SupergridGraph, v: Point) -> list[Point]:
    """Neighbors of v present in g, in Direction scan order UL..DR."""
    if v not in g:
        raise VertexNotInGraph(f"{v} is not a vertex of the graph")
    out = []
    for dx, dy in OFFSETS:
        w = Point(v.x + dx, v.y + dy)
        if w in g:
            out.append(w)
    return out


def induced_neighborhood(g: SupergridGraph, v: Point) -> SupergridGraph:
    """Subgraph induced by the neighbors of v (adjacency stays implicit)."""
    return SupergridGraph(neighbors(g, v))
