"""Exhaustive and randomized generation of supergrid graphs in a box.

Exhaustive mode walks every subset of a width x height cell box as a bitmask
in row-major order (bit i = cell (i % width, i // width)), ascending, which
makes the enumeration order part of the external contract.  The box is hard
capped at 25 cells (2**25 subsets) so exhaustive runs stay seconds-scale.

Randomized mode grows a connected blob cell by cell and then repairs it to
linear convexity by closing every line gap; uniform subsets of useful size
are almost never linearly convex, so repair-by-addition is what makes the
sampler productive.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .classify import (
    is_connected,
    is_linear_convex,
    is_locally_connected,
    is_two_connected,
    line_keys,
    line_parameter,
    point_on_line,
)
from .errors import BoxTooLarge, GenerationBudgetExhausted
from .grid import OFFSETS, Point, SupergridGraph, from_points

EXHAUSTIVE_CELL_CAP = 25
GROWTH_BUDGET = 1000

PREDICATES: dict[str, Callable[[SupergridGraph], bool]] = {
    "connected": is_connected,
    "two_connected": is_two_connected,
    "linear_convex": is_linear_convex,
    "locally_connected": is_locally_connected,
}

# Cheap predicates are evaluated first when filtering.
_PREDICATE_ORDER = ("linear_convex", "connected", "two_connected", "locally_connected")


@dataclass(frozen=True)
class EnumSpec:
    """Parameters shared by the exhaustive and randomized generators."""

    width: int
    height: int
    min_vertices: int = 0
    require: frozenset[str] = field(default_factory=frozenset)
    dedup_symmetry: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("box dimensions must be positive")
        object.__setattr__(self, "require", frozenset(self.require))
        unknown = self.require - set(PREDICATES)
        if unknown:
            raise ValueError(f"unknown predicates: {sorted(unknown)}")


def _satisfies(g: SupergridGraph, require: frozenset[str]) -> bool:
    return all(PREDICATES[name](g) for name in _PREDICATE_ORDER if name in require)


def enumerate_graphs(spec: EnumSpec) -> Iterator[SupergridGraph]:
    """Stream every box subset meeting ``min_vertices`` and ``require``.

    With ``dedup_symmetry`` the stream yields ``canonical_form(g)`` once per
    equivalence class under the dihedral group plus translation.
    """
    cells = spec.width * spec.height
    if cells > EXHAUSTIVE_CELL_CAP:
        raise BoxTooLarge(f"{spec.width}x{spec.height} exceeds {EXHAUSTIVE_CELL_CAP} cells")
    coords = [Point(i % spec.width, i // spec.width) for i in range(cells)]
    seen: set[tuple[tuple[int, int], ...]] = set()
    for mask in range(1 << cells):
        if mask.bit_count() < spec.min_vertices:
            continue
        points = []
        m = mask
        while m:
            low = m & -m
            points.append(coords[low.bit_length() - 1])
            m ^= low
        g = SupergridGraph(points)
        if not _satisfies(g, spec.require):
            continue
        if spec.dedup_symmetry:
            canon = canonical_form(g)
            key = tuple((p.x, p.y) for p in canon.sorted_vertices())
            if key in seen:
                continue
            seen.add(key)
            yield canon
        else:
            yield g


# The dihedral group of the square: rotations by 90 degrees and reflections.
_SYMMETRIES: tuple[Callable[[int, int], tuple[int, int]], ...] = (
    lambda x, y: (x, y),
    lambda x, y: (-y, x),
    lambda x, y: (-x, -y),
    lambda x, y: (y, -x),
    lambda x, y: (-x, y),
    lambda x, y: (x, -y),
    lambda x, y: (y, x),
    lambda x, y: (-y, -x),
)


def canonical_form(g: SupergridGraph) -> SupergridGraph:
    """Smallest translated image of g under the eight square symmetries.

    The encoding compared is the (y, x)-sorted coordinate tuple after moving
    the bounding-box corner to the origin; the result is idempotent and
    invariant under any input symmetry or translation.
    """
    if not len(g):
        return g
    best: tuple[tuple[int, int], ...] | None = None
    for sym in _SYMMETRIES:
        pts = [sym(p.x, p.y) for p in g.vertices]
        min_x = min(x for x, _ in pts)
        min_y = min(y for _, y in pts)
        encoded = tuple(sorted(((y - min_y, x - min_x) for x, y in pts)))
        if best is None or encoded < best:
            best = encoded
    return SupergridGraph(Point(x, y) for y, x in best)


def linear_convex_closure(
    points: SupergridGraph | list[Point] | frozenset[Point],
) -> tuple[SupergridGraph, frozenset[Point]]:
    """Smallest linearly convex superset, plus the vertices that were added.

    Repeatedly fills every missing lattice point that lies strictly between
    two same-line members until no line has a gap.  Every added vertex sits
    between two vertices that remain in the result, so removing any one of
    them re-opens a gap: the closure is minimal point by point.
    """
    current: set[Point] = set(points.vertices if isinstance(points, SupergridGraph) else points)
    added: set[Point] = set()
    while True:
        fresh: set[Point] = set()
        buckets: dict = {}
        for p in current:
            for key in line_keys(p):
                buckets.setdefault(key, []).append(line_parameter(key.direction, p))
        for key, params in buckets.items():
            params.sort()
            for a, b in zip(params, params[1:]):
                for t in range(a + 1, b):
                    fresh.add(point_on_line(key, t))
        fresh -= current
        if not fresh:
            break
        current |= fresh
        added |= fresh
    return SupergridGraph(current), frozenset(added)


def random_graph(spec: EnumSpec) -> SupergridGraph:
    """Seeded growth inside the box, repaired to linear convexity each step.

    Starting from one random cell, each iteration adds a uniformly random box
    cell adjacent to the current set and then closes all line gaps, until
    ``min_vertices`` and every predicate in ``require`` hold.  Deterministic
    for a fixed seed; raises GenerationBudgetExhausted after 1000 iterations
    or when the blob cannot grow further.
    """
    rng = random.Random(spec.seed)
    box = [Point(x, y) for y in range(spec.height) for x in range(spec.width)]
    box_set = set(box)
    current: set[Point] = {box[rng.randrange(len(box))]}
    for _ in range(GROWTH_BUDGET):
        g = SupergridGraph(current)
        if len(g) >= spec.min_vertices and _satisfies(g, spec.require):
            return g
        fringe: set[Point] = set()
        for p in current:
            for dx, dy in OFFSETS:
                w = Point(p.x + dx, p.y + dy)
                if w in box_set and w not in current:
                    fringe.add(w)
        candidates = sorted(fringe, key=Point.key)
        if not candidates:
            break
        current.add(candidates[rng.randrange(len(candidates))])
        closed, _ = linear_convex_closure(current)
        current = set(closed.vertices)
    raise GenerationBudgetExhausted(
        f"no {sorted(spec.require)} graph of >= {spec.min_vertices} vertices "
        f"found in {spec.width}x{spec.height} with seed {spec.seed}"
    )


__all__ = [
    "EnumSpec",
    "PREDICATES",
    "canonical_form",
    "enumerate_graphs",
    "linear_convex_closure",
    "random_graph",
    "from_points",
]
