"""Exhaustive machine-verification suites over all subsets of a cell box.

One streaming pass drives four checks at once:

* local connectivity is implied by 2-connectivity plus linear convexity
  (zero tolerated exceptions);
* the four forced-vertex implications hold in every linearly convex graph
  (two opposite corner neighbors force the side neighbor between them);
* the constructive solver finds a full-coverage cycle on every 2-connected
  linearly convex subset, growing by exactly one vertex per step;
* the independent backtracking oracle agrees in both directions on every
  subset small enough to search exhaustively.

The pass also aggregates how often each extension rule fired, which is the
committed rule-frequency artifact; any fallback firing is flagged for audit
but is not itself a violation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import is_linear_convex, is_locally_connected, is_two_connected
from .enumeration import EnumSpec, enumerate_graphs
from .grid import Point, SupergridGraph
from .hamiltonian import (
    ExtensionRule,
    brute_force_hamiltonian,
    find_hamiltonian_cycle,
)

_FORCED_VERTEX_PATTERNS = (
    ((-1, -1), (1, -1), (0, -1)),  # UL and UR force U
    ((-1, -1), (-1, 1), (-1, 0)),  # UL and DL force L
    ((1, -1), (1, 1), (1, 0)),     # UR and DR force R
    ((-1, 1), (1, 1), (0, 1)),     # DL and DR force D
)


def forced_vertex_violations(g: SupergridGraph) -> list[tuple[Point, Point]]:
    """Pairs (vertex, missing forced neighbor) violating the closure property."""
    out = []
    verts = g.vertices
    for v in g.sorted_vertices():
        for (ax, ay), (bx, by), (cx, cy) in _FORCED_VERTEX_PATTERNS:
            if (
                Point(v.x + ax, v.y + ay) in verts
                and Point(v.x + bx, v.y + by) in verts
                and Point(v.x + cx, v.y + cy) not in verts
            ):
                out.append((v, Point(v.x + cx, v.y + cy)))
    return out


@dataclass
class SuiteReport:
    """Aggregated counters and violations from one box sweep."""

    width: int
    height: int
    total_subsets: int = 0
    linear_convex: int = 0
    two_connected: int = 0
    strict_instances: int = 0
    local_connectivity_violations: list[int] = field(default_factory=list)
    forced_vertex_violations: list[int] = field(default_factory=list)
    solve_failures: list[int] = field(default_factory=list)
    growth_violations: list[int] = field(default_factory=list)
    oracle_mismatches: list[int] = field(default_factory=list)
    oracle_checked: int = 0
    rule_counts: dict[str, int] = field(
        default_factory=lambda: {rule.value: 0 for rule in ExtensionRule}
    )

    @property
    def fallback_fired(self) -> int:
        return self.rule_counts[ExtensionRule.FALLBACK_SEARCH.value]

    def total_violations(self) -> int:
        return (
            len(self.local_connectivity_violations)
            + len(self.forced_vertex_violations)
            + len(self.solve_failures)
            + len(self.growth_violations)
            + len(self.oracle_mismatches)
        )

    def summary_lines(self) -> list[str]:
        return [
            f"box {self.width}x{self.height}: {self.total_subsets} subsets",
            f"linear_convex: {self.linear_convex}",
            f"two_connected: {self.two_connected}",
            f"strict instances (two_connected & linear_convex): {self.strict_instances}",
            f"local-connectivity violations: {len(self.local_connectivity_violations)}",
            f"forced-vertex violations: {len(self.forced_vertex_violations)}",
            f"hamiltonian solve failures: {len(self.solve_failures)}",
            f"step-growth violations: {len(self.growth_violations)}",
            f"oracle mismatches ({self.oracle_checked} graphs checked): "
            f"{len(self.oracle_mismatches)}",
            "rule counts: "
            + ", ".join(f"{name}={count}" for name, count in sorted(self.rule_counts.items())),
            f"fallback fired: {self.fallback_fired}"
            + (" (flagged for audit)" if self.fallback_fired else ""),
            f"violations: {self.total_violations()}",
        ]


def mask_to_graph(mask: int, width: int) -> SupergridGraph:
    """Subset bitmask (row-major, bit i = cell (i % width, i // width)) to graph."""
    points = []
    m = mask
    while m:
        low = m & -m
        i = low.bit_length() - 1
        points.append(Point(i % width, i // width))
        m ^= low
    return SupergridGraph(points)


def solve_with_growth_check(g: SupergridGraph) -> tuple[bool, bool, dict[str, int]]:
    """Run the strict solver step by step.

    Returns (found full cycle, every step grew by exactly one, rule counts).
    """
    result = find_hamiltonian_cycle(g, strict=True)
    if result.status != "cycle":
        return False, True, {rule.value: 0 for rule in ExtensionRule}
    counts = result.trace.rule_counts()
    expected = 3
    monotone = True
    for step in result.trace.steps:
        if step.cycle_length_before != expected:
            monotone = False
        expected += 1
    if expected != len(g):
        monotone = False
    return True, monotone, counts


def run_box_suite(width: int, height: int, oracle_limit: int = 12) -> SuiteReport:
    """Single-threaded sweep of every subset of the width x height box."""
    report = SuiteReport(width=width, height=height)
    spec = EnumSpec(width=width, height=height)
    # With no filters every bitmask yields exactly one graph, so the stream
    # index IS the subset mask; violations are recorded by that mask.
    for mask, g in enumerate(enumerate_graphs(spec)):
        report.total_subsets += 1
        lc = is_linear_convex(g)
        tc = is_two_connected(g)
        if lc:
            report.linear_convex += 1
            if forced_vertex_violations(g):
                report.forced_vertex_violations.append(mask)
        if tc:
            report.two_connected += 1
        solved = False
        if lc and tc:
            report.strict_instances += 1
            if not is_locally_connected(g):
                report.local_connectivity_violations.append(mask)
            solved, monotone, counts = solve_with_growth_check(g)
            if not solved:
                report.solve_failures.append(mask)
            if not monotone:
                report.growth_violations.append(mask)
            for name, count in counts.items():
                report.rule_counts[name] += count
        if len(g) <= oracle_limit:
            report.oracle_checked += 1
            oracle_cycle = brute_force_hamiltonian(g)
            if not tc and oracle_cycle is not None:
                report.oracle_mismatches.append(mask)
            if solved and oracle_cycle is None:
                report.oracle_mismatches.append(mask)
    return report
