"""Structural predicates: linear convexity, connectivity, 2-connectivity,
local connectivity, and a combined per-graph report with witnesses.

Conventions for degenerate inputs (the underlying theory never evaluates
these, so they are library choices, stated here and tested):

* the empty graph is connected (vacuously) but not 2-connected;
* 2-connectivity additionally requires at least 3 vertices (the smallest
  cycle has 3), and is decided via the articulation-vertex characterization;
* empty and singleton induced neighborhoods count as connected, so vertices
  of degree 0 or 1 do not by themselves fail local connectivity.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .grid import OFFSETS, Point, SupergridGraph, induced_neighborhood


class LineDirection(Enum):
    """The four edge directions of the infinite lattice."""

    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    DIAGONAL = "diagonal"          # constant y - x, traced upper-left to lower-right
    ANTIDIAGONAL = "antidiagonal"  # constant y + x, traced lower-left to upper-right


@dataclass(frozen=True, slots=True)
class LineKey:
    """Identifies one lattice line: direction plus its integer index.

    The index is y for horizontal lines, x for vertical, y-x for diagonal and
    y+x for antidiagonal; two points share a line iff they share a LineKey.
    """

    direction: LineDirection
    index: int


_DIRECTION_RANK = {d: i for i, d in enumerate(LineDirection)}


def line_keys(p: Point) -> tuple[LineKey, LineKey, LineKey, LineKey]:
    """The four lines through p, one per direction."""
    return (
        LineKey(LineDirection.HORIZONTAL, p.y),
        LineKey(LineDirection.VERTICAL, p.x),
        LineKey(LineDirection.DIAGONAL, p.y - p.x),
        LineKey(LineDirection.ANTIDIAGONAL, p.y + p.x),
    )


def line_parameter(direction: LineDirection, p: Point) -> int:
    """Position of p along a line of the given direction (x, except y for vertical)."""
    if direction is LineDirection.VERTICAL:
        return p.y
    return p.x


def point_on_line(key: LineKey, parameter: int) -> Point:
    """The lattice point at the given parameter on the given line."""
    if key.direction is LineDirection.HORIZONTAL:
        return Point(parameter, key.index)
    if key.direction is LineDirection.VERTICAL:
        return Point(key.index, parameter)
    if key.direction is LineDirection.DIAGONAL:
        return Point(parameter, key.index + parameter)
    return Point(parameter, key.index - parameter)


@dataclass(frozen=True, slots=True)
class ViolationWitness:
    """Concrete evidence for a failed predicate.

    For linear convexity: ``points`` holds two same-line vertices, ``missing``
    the absent lattice point strictly between them, ``line`` the shared line.
    For local connectivity: ``points`` holds the single vertex whose induced
    neighborhood is disconnected.
    """

    predicate: str
    points: tuple[Point, ...]
    missing: Point | None = None
    line: LineKey | None = None


@dataclass(frozen=True, slots=True)
class ClassificationReport:
    vertex_count: int
    connected: bool
    two_connected: bool
    linear_convex: bool
    locally_connected: bool
    violation_witness: ViolationWitness | None = None


def linear_convexity_violation(g: SupergridGraph) -> ViolationWitness | None:
    """First gap on any lattice line, or None if g is linearly convex.

    Vertices are bucketed by each of the four LineKeys; each bucket, sorted by
    its run parameter, must be a contiguous range.  Buckets are scanned in a
    fixed order (direction, then line index) so the witness is deterministic.
    """
    buckets: dict[LineKey, list[int]] = {}
    for p in g.sorted_vertices():
        for key in line_keys(p):
            buckets.setdefault(key, []).append(line_parameter(key.direction, p))
    for key in sorted(buckets, key=lambda k: (_DIRECTION_RANK[k.direction], k.index)):
        params = sorted(buckets[key])
        for a, b in zip(params, params[1:]):
            if b - a > 1:
                return ViolationWitness(
                    predicate="linear_convex",
                    points=(point_on_line(key, a), point_on_line(key, b)),
                    missing=point_on_line(key, a + 1),
                    line=key,
                )
    return None


def is_linear_convex(g: SupergridGraph) -> bool:
    """True iff every lattice line meets g in a contiguous run (or not at all)."""
    return linear_convexity_violation(g) is None


def is_connected(g: SupergridGraph) -> bool:
    """True iff g has at most one vertex or one traversal reaches all of them."""
    n = len(g)
    if n <= 1:
        return True
    start = g.sorted_vertices()[0]
    seen = {start}
    queue = deque([start])
    verts = g.vertices
    while queue:
        v = queue.popleft()
        for dx, dy in OFFSETS:
            w = Point(v.x + dx, v.y + dy)
            if w in verts and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == n


def _has_articulation_vertex(g: SupergridGraph) -> bool:
    """Iterative lowpoint DFS over a connected graph with >= 3 vertices."""
    verts = g.vertices
    order = g.sorted_vertices()
    index: dict[Point, int] = {}
    low: dict[Point, int] = {}
    parent: dict[Point, Point | None] = {}
    root = order[0]
    root_children = 0
    counter = 0

    # Explicit stack of (vertex, neighbor iterator) frames.
    def nbrs(v: Point) -> list[Point]:
        return [
            Point(v.x + dx, v.y + dy)
            for dx, dy in OFFSETS
            if Point(v.x + dx, v.y + dy) in verts
        ]

    index[root] = low[root] = counter
    counter += 1
    parent[root] = None
    stack = [(root, iter(nbrs(root)))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if w not in index:
                parent[w] = v
                index[w] = low[w] = counter
                counter += 1
                if v == root:
                    root_children += 1
                stack.append((w, iter(nbrs(w))))
                advanced = True
                break
            if w != parent[v]:
                low[v] = min(low[v], index[w])
        if not advanced:
            stack.pop()
            p = parent[v]
            if p is not None:
                low[p] = min(low[p], low[v])
                if p != root and low[v] >= index[p]:
                    return True
    return root_children > 1


def is_two_connected(g: SupergridGraph) -> bool:
    """True iff |V| >= 3, g is connected, and g has no articulation vertex."""
    if len(g) < 3:
        return False
    if not is_connected(g):
        return False
    return not _has_articulation_vertex(g)


def local_connectivity_violation(g: SupergridGraph) -> ViolationWitness | None:
    """First vertex (lex order) whose induced neighborhood is disconnected."""
    for v in g.sorted_vertices():
        if not is_connected(induced_neighborhood(g, v)):
            return ViolationWitness(predicate="locally_connected", points=(v,))
    return None


def is_locally_connected(g: SupergridGraph) -> bool:
    """True iff the induced neighborhood of every vertex is connected."""
    return local_connectivity_violation(g) is None


def classify(g: SupergridGraph) -> ClassificationReport:
    """Evaluate all four predicates; keep the first failing witness.

    Witnesses exist only for linear convexity and local connectivity; when
    both fail, the linear-convexity witness wins.
    """
    convexity = linear_convexity_violation(g)
    locality = local_connectivity_violation(g)
    return ClassificationReport(
        vertex_count=len(g),
        connected=is_connected(g),
        two_connected=is_two_connected(g),
        linear_convex=convexity is None,
        locally_connected=locality is None,
        violation_witness=convexity if convexity is not None else locality,
    )
