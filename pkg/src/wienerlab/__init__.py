"""Distance-distribution polynomials of graphs.

The package pairs every closed form (graph families, binary operations,
dendrimer trees, Coxeter reflection-length polynomials) with a brute-force
BFS oracle, and ships the cross-validation suite that keeps them honest.
"""

from .errors import (
    Disconnected,
    FormatError,
    InfeasiblePair,
    InvalidEdge,
    InvalidParameter,
    InvalidRank,
    InvalidVertex,
    InvalidWidth,
    NonExactDivision,
    NotATree,
    ProfileMismatch,
    RankTooLarge,
    TooLarge,
    TrivialFactor,
    UnsupportedOp,
    WienerLabError,
)
from .graph_core import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    bfs_distances,
    build_graph,
    diameter,
    format_edge_list,
    is_connected,
    parse_edge_list,
)
from .polynomial import (
    Poly,
    SequenceVerdict,
    analyze_sequence,
    factor_negative_rational_roots,
    poly_from_json,
    poly_to_json,
    q_analog,
)
from .wiener_engine import (
    PropertyChecks,
    WienerReport,
    ordered_wiener,
    relative_wiener,
    verify_basic_properties,
    wiener_index,
    wiener_polynomial,
    wiener_report,
)

__version__ = "0.1.0"

__all__ = [
    "UNREACHABLE",
    "DistanceMatrix",
    "Graph",
    "Poly",
    "PropertyChecks",
    "SequenceVerdict",
    "WienerReport",
    "all_pairs_distances",
    "analyze_sequence",
    "bfs_distances",
    "build_graph",
    "diameter",
    "factor_negative_rational_roots",
    "format_edge_list",
    "is_connected",
    "ordered_wiener",
    "parse_edge_list",
    "poly_from_json",
    "poly_to_json",
    "q_analog",
    "relative_wiener",
    "verify_basic_properties",
    "wiener_index",
    "wiener_polynomial",
    "wiener_report",
    "Disconnected",
    "FormatError",
    "InfeasiblePair",
    "InvalidEdge",
    "InvalidParameter",
    "InvalidRank",
    "InvalidVertex",
    "InvalidWidth",
    "NonExactDivision",
    "NotATree",
    "ProfileMismatch",
    "RankTooLarge",
    "TooLarge",
    "TrivialFactor",
    "UnsupportedOp",
    "WienerLabError",
]
