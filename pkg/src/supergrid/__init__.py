"""Supergrid graphs, their structural classifiers, and a constructive
Hamiltonian-cycle engine for the 2-connected linearly convex class, with an
exhaustive enumerator and a brute-force oracle for machine verification.
"""

from .classify import (
    ClassificationReport,
    LineDirection,
    LineKey,
    ViolationWitness,
    classify,
    is_connected,
    is_linear_convex,
    is_locally_connected,
    is_two_connected,
    linear_convexity_violation,
    local_connectivity_violation,
)
from .cycles import (
    Cycle,
    PathSeq,
    concat_cycle_path,
    concat_cycles_edges,
    concat_cycles_shared_vertex,
    insert_vertex,
    reverse_path,
    validate_cycle,
)
from .enumeration import (
    EnumSpec,
    canonical_form,
    enumerate_graphs,
    linear_convex_closure,
    random_graph,
)
from .errors import (
    AlreadyHamiltonian,
    BoxTooLarge,
    CycleFormatError,
    ExtensionStuck,
    GenerationBudgetExhausted,
    InvalidCharacter,
    NoBridgeEdges,
    NoConcatenationEdge,
    NoInsertionEdge,
    NoPivotEdge,
    NoSharedVertex,
    PreconditionViolated,
    SizeBoundExceeded,
    SupergridError,
    VertexNotInGraph,
)
from .grid import (
    Direction,
    Point,
    SupergridGraph,
    adjacent,
    from_points,
    induced_neighborhood,
    neighbors,
)
from .hamiltonian import (
    ExtensionRule,
    ExtensionStep,
    ExtensionTrace,
    HamiltonianResult,
    StuckWitness,
    brute_force_hamiltonian,
    extend_cycle,
    extension_steps,
    find_hamiltonian_cycle,
    seed_cycle,
)
from .lattice_io import (
    export_svg,
    parse_cycle,
    parse_lattice,
    render_lattice,
    report_to_json,
    trace_to_jsonl,
    write_cycle,
)
from .verification import SuiteReport, forced_vertex_violations, run_box_suite

__version__ = "0.1.0"
