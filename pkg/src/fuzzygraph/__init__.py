"""Exact analytics for fuzzy graphs.

Connectivity and Wiener indices computed with exact arithmetic, edge
classification, fuzzy tree and saturated fuzzy cycle recognition, plus a
falsification harness for two published claims about these indices.
"""

from .connectivity import (
    EdgeClass,
    EdgeClassification,
    StrengthMatrix,
    classify_edge,
    classify_edges,
    strength_of_connectedness,
    strong_subgraph,
)
from .errors import (
    BadParamsError,
    BadSpecError,
    DisconnectedError,
    DuplicateEdgeError,
    DuplicateVertexError,
    FuzzyGraphError,
    GraphConstructionError,
    MuExceedsSigmaError,
    NoSuchEdgeError,
    NotAFuzzyTreeError,
    ParseError,
    SelfLoopError,
    StrongDisconnectedError,
    TooLargeError,
    UnknownEndpointError,
    ZeroMuError,
)
from .falsifier import (
    ClaimId,
    ClaimVerdict,
    check_corollary_star,
    check_theorem_star,
    search_counterexamples,
)
from .indices import (
    DistanceMatrix,
    IndexReport,
    PairEntry,
    connectivity_index,
    geodesic_distance,
    index_report,
    theorem_star_formula,
    wiener_index,
)
from .model import (
    MICRO,
    FuzzyGraph,
    Membership,
    PathRecord,
    VertexId,
    build_graph,
    format_fraction,
    parse_graph,
    path_record,
)
from .oracle import (
    ci_bruteforce,
    conn_bruteforce,
    ds_bruteforce,
    strong_edges_bruteforce,
    wi_bruteforce,
)
from .structure import (
    GraphKind,
    SaturatedCycleSpec,
    SpanningTree,
    fuzzy_tree_mst,
    graph_kind,
    is_fuzzy_cycle,
    is_fuzzy_tree,
    is_saturated_fuzzy_cycle,
    make_saturated_cycle,
    maximum_spanning_tree,
    random_fuzzy_tree,
)

__version__ = "0.1.0"

__all__ = [
    "BadParamsError",
    "BadSpecError",
    "ClaimId",
    "ClaimVerdict",
    "DisconnectedError",
    "DistanceMatrix",
    "DuplicateEdgeError",
    "DuplicateVertexError",
    "EdgeClass",
    "EdgeClassification",
    "FuzzyGraph",
    "FuzzyGraphError",
    "GraphConstructionError",
    "GraphKind",
    "IndexReport",
    "MICRO",
    "Membership",
    "MuExceedsSigmaError",
    "NoSuchEdgeError",
    "NotAFuzzyTreeError",
    "PairEntry",
    "ParseError",
    "PathRecord",
    "SaturatedCycleSpec",
    "SelfLoopError",
    "SpanningTree",
    "StrengthMatrix",
    "StrongDisconnectedError",
    "TooLargeError",
    "UnknownEndpointError",
    "VertexId",
    "ZeroMuError",
    "build_graph",
    "check_corollary_star",
    "check_theorem_star",
    "ci_bruteforce",
    "classify_edge",
    "classify_edges",
    "conn_bruteforce",
    "connectivity_index",
    "ds_bruteforce",
    "format_fraction",
    "fuzzy_tree_mst",
    "geodesic_distance",
    "graph_kind",
    "index_report",
    "is_fuzzy_cycle",
    "is_fuzzy_tree",
    "is_saturated_fuzzy_cycle",
    "make_saturated_cycle",
    "maximum_spanning_tree",
    "parse_graph",
    "path_record",
    "random_fuzzy_tree",
    "search_counterexamples",
    "strength_of_connectedness",
    "strong_edges_bruteforce",
    "strong_subgraph",
    "theorem_star_formula",
    "wiener_index",
]
