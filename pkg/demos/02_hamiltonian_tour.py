"""Grow a Hamiltonian cycle one vertex at a time.

Every 2-connected, linearly convex supergrid graph is cycle extendable: any
cycle that does not yet cover the graph can be grown by exactly one vertex.
The solver exploits this constructively - seed a triangle at the smallest
vertex, then repeatedly fire the first applicable extension rule - and the
trace records which rule fired at every step.
"""

from supergrid import find_hamiltonian_cycle, seed_cycle
from supergrid.lattice_io import parse_lattice, write_cycle


def show_trace(doc: str) -> None:
    g = parse_lattice(doc)
    result = find_hamiltonian_cycle(g, strict=True)
    assert result.found
    for step in result.trace.steps:
        pivots = ""
        if step.pivot_z is not None:
            pivots = f", pivot z={step.pivot_z}"
            if step.pivot_y is not None:
                pivots += f", pivot y={step.pivot_y}"
        print(f"  length {step.cycle_length_before:2d}: attach {step.attached_vertex}"
              f" via {step.rule.value} at anchor {step.anchor_u1}{pivots}")
    print("  rule totals:", {k: v for k, v in result.trace.rule_counts().items() if v})


# ---------------------------------------------------------------------------
# On most graphs plain insertion suffices: some outside vertex neighbors both
# endpoints of a cycle edge and is spliced straight in.
shape = """\
.##..
####.
#####
.###.
"""
g = parse_lattice(shape)
print(f"{len(g)}-vertex slab, seed {' -> '.join(map(str, seed_cycle(g).verts))}:")
show_trace(shape)
print()

# ---------------------------------------------------------------------------
# Insertion alone is not enough.  Here the last vertex (0,2) touches the
# cycle only at (0,1) and (1,1), which are never consecutive on it, so the
# engine reroutes the cycle around a side pivot adjacent to the new vertex.
print("pentomino needing an adjacent-pivot rewire (CLAIM1):")
show_trace("##\n##\n#.\n")
print()

# ---------------------------------------------------------------------------
# And when no pivot adjacent to the new vertex exists at all, the rewiring
# falls through to the non-adjacent-pivot family (CLAIM2).
print("stair shape finishing with a non-adjacent-pivot rewire (CLAIM2):")
show_trace(".##.\n###.\n.###\n")
print()

# ---------------------------------------------------------------------------
# Permissive mode drops the convexity requirement and doubles as a probe:
# the 3x3 boundary ring is Hamiltonian (it IS a cycle) yet no 4-cycle
# contains its seed triangle, so extension legitimately gets stuck.
ring = parse_lattice("###\n#.#\n###")
probe = find_hamiltonian_cycle(ring, strict=False)
print("3x3 ring, permissive mode:", probe.status)
print("stuck cycle:", " -> ".join(map(str, probe.witness.cycle.verts)))
print()

# ---------------------------------------------------------------------------
# The full tour, ready for downstream tooling.
result = find_hamiltonian_cycle(g, strict=True)
print("final tour of the slab:")
print(write_cycle(result.cycle))
