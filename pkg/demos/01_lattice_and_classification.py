"""Build supergrid graphs and classify their structure.

A supergrid graph is just a finite set of integer lattice points; two points
are adjacent whenever they differ by at most one in each coordinate, so every
vertex has up to eight neighbors (king moves).  This walk-through builds a
few small graphs and runs the four structural predicates on them.
"""

from supergrid import Point, classify, from_points, neighbors
from supergrid.lattice_io import parse_lattice, render_lattice

# ---------------------------------------------------------------------------
# A 2x2 block is the smallest "thick" graph: every pair of its vertices is
# adjacent, including the diagonals.
block = from_points([Point(0, 0), Point(1, 0), Point(0, 1), Point(1, 1)])
print("2x2 block, neighbors of (0,0):", neighbors(block, Point(0, 0)))
print(classify(block))
print()

# ---------------------------------------------------------------------------
# Graphs can be written as plain text: '#' is a vertex, '.' is empty space.
art = """\
; a plus sign
.#.
###
.#.
"""
plus = parse_lattice(art)
report = classify(plus)
print("plus sign:")
print(render_lattice(plus))
print("connected:", report.connected)
print("2-connected:", report.two_connected)
print("linearly convex:", report.linear_convex)
print("locally connected:", report.locally_connected)
print()

# ---------------------------------------------------------------------------
# Linear convexity demands that every lattice line (horizontal, vertical and
# both diagonals) meets the graph in one contiguous run.  A gap produces a
# concrete witness: the line, the flanking vertices, and the missing point.
gappy = parse_lattice("#.#")
report = classify(gappy)
print("document '#.#':")
print("linearly convex:", report.linear_convex)
w = report.violation_witness
print(f"witness: {w.points[0]} and {w.points[1]} on the {w.line.direction.value} "
      f"line {w.line.index} with {w.missing} missing")
