"""Recognition of line graphs of gain graphs, with root reconstruction and
the eigenvalue -2 test for signed graphs."""

from .errors import DomainError, GainLineError, InternalInconsistency, ParseError, StructuralError
from .gain_graph import (
    GainGraph,
    Triangle,
    apply_switching,
    edge_induced,
    is_balanced,
    is_equivalent_to_constant,
    is_switching_equivalent,
    is_switching_isomorphic,
    triangle_gain_is,
    triangles,
    vertex_induced,
    walk_gain,
)
from .graphs import SimpleGraph, circuit_rank
from .groups import FiniteGroup, named_group
from .line import (
    GPhase,
    OrientedGainTriple,
    canonical_phase,
    induced_phase_by_edges,
    induced_phase_by_vertices,
    line_gain_direct,
    line_graph,
    psi_L_of_phase,
    psi_of_phase,
)
from .recognition import (
    ForbiddenWitness,
    KrauszPartition,
    RootWitness,
    TriangleWitness,
    Verdict,
    check_small_subgraphs,
    check_triangle_conditions,
    check_Y_free,
    is_gain_line,
    is_line_graph_classical,
    krausz_partition,
    root_gain_graph,
    root_search,
    verify_witness,
)

from .spectral import (
    Spectrum,
    classify_by_spectral_radius,
    forbidden_signed_subgraph,
    is_signed_line_spectral,
    signed_adjacency,
    signed_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "apply_switching",
    "canonical_phase",
    "check_small_subgraphs",
    "check_triangle_conditions",
    "check_Y_free",
    "circuit_rank",
    "classify_by_spectral_radius",
    "DomainError",
    "edge_induced",
    "FiniteGroup",
    "forbidden_signed_subgraph",
    "ForbiddenWitness",
    "GainGraph",
    "GainLineError",
    "GPhase",
    "induced_phase_by_edges",
    "induced_phase_by_vertices",
    "InternalInconsistency",
    "is_balanced",
    "is_equivalent_to_constant",
    "is_gain_line",
    "is_line_graph_classical",
    "is_signed_line_spectral",
    "is_switching_equivalent",
    "is_switching_isomorphic",
    "krausz_partition",
    "KrauszPartition",
    "line_gain_direct",
    "line_graph",
    "named_group",
    "OrientedGainTriple",
    "ParseError",
    "psi_L_of_phase",
    "psi_of_phase",
    "root_gain_graph",
    "root_search",
    "RootWitness",
    "signed_adjacency",
    "signed_spectrum",
    "SimpleGraph",
    "Spectrum",
    "StructuralError",
    "Triangle",
    "triangle_gain_is",
    "triangles",
    "TriangleWitness",
    "Verdict",
    "verify_witness",
    "vertex_induced",
    "walk_gain",
]
