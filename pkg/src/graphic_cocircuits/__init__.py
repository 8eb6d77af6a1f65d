"""Binary matroids, signed graphs and a decision procedure for signed-graphic
cographic matroids with graphic cocircuits."""

from .catalog import FamilyName, named_graph, named_matroid, r15, r16
from .errors import (
    AxiomViolation,
    BoundExceeded,
    FormatError,
    GraphicCocircuitsError,
    NotGraphic,
    NotThreeConnected,
    PreconditionError,
    RankDeficient,
    UnknownLabel,
)
from .gf2 import Gf2Matrix, format_matrix, parse_matrix, rank, rref, standard_form
from .graph import (
    Edge,
    Multigraph,
    circles,
    contract_circle,
    contract_edge,
    cycle_matroid,
    delete_edge,
    format_graph,
    has_graph_minor,
    is_three_connected,
    parse_graph,
    tutte_connectivity,
)
from .matroid import (
    BinaryMatroid,
    CircuitMatroid,
    circuits,
    cocircuits,
    connectivity,
    contract,
    delete,
    direct_sum,
    dual,
    first_separation,
    has_minor,
    is_isomorphic,
    k_separations,
    rank_subset,
    two_sum,
    verify_axioms,
)
from .negami import condition_iii, negami_closure, o1_extensions, o2_splits, verify_family_theorems
from .recognize import (
    RecognitionReport,
    decompose_1_2_sums,
    family_membership,
    has_graphic_cocircuits,
    is_graphic,
    realize_graph,
    recognize_cographic,
    regular_signed_graphic_check,
)
from .signed import SignedGraph, cycle_sign, is_balanced, signed_circuits, signed_matroid

__version__ = "0.1.0"

__all__ = [
    "AxiomViolation",
    "BinaryMatroid",
    "BoundExceeded",
    "CircuitMatroid",
    "Edge",
    "FamilyName",
    "FormatError",
    "Gf2Matrix",
    "GraphicCocircuitsError",
    "Multigraph",
    "NotGraphic",
    "NotThreeConnected",
    "PreconditionError",
    "RankDeficient",
    "RecognitionReport",
    "SignedGraph",
    "UnknownLabel",
    "circles",
    "circuits",
    "cocircuits",
    "condition_iii",
    "connectivity",
    "contract",
    "contract_circle",
    "contract_edge",
    "cycle_matroid",
    "cycle_sign",
    "decompose_1_2_sums",
    "delete",
    "delete_edge",
    "direct_sum",
    "dual",
    "family_membership",
    "first_separation",
    "format_graph",
    "format_matrix",
    "has_graph_minor",
    "has_graphic_cocircuits",
    "has_minor",
    "is_balanced",
    "is_graphic",
    "is_isomorphic",
    "is_three_connected",
    "k_separations",
    "named_graph",
    "named_matroid",
    "negami_closure",
    "o1_extensions",
    "o2_splits",
    "parse_graph",
    "parse_matrix",
    "r15",
    "r16",
    "rank",
    "rank_subset",
    "realize_graph",
    "recognize_cographic",
    "regular_signed_graphic_check",
    "rref",
    "signed_circuits",
    "signed_matroid",
    "standard_form",
    "tutte_connectivity",
    "two_sum",
    "verify_axioms",
    "verify_family_theorems",
]
