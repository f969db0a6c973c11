"""Convex-cycle enumeration, the extremal bound n(m-n+1)/g with its
even-cycle / Moore-graph equality classification, and exact spectral
girth-cycle counting for simple graphs."""

from .cli import run as cli_run
from .convexity import (
    Cycle,
    CycleCensus,
    EvenAntipodalPair,
    OddAntipodalPair,
    brute_force_convex_cycles,
    canonical_cycle,
    enumerate_convex_cycles,
    even_antipodal_pairs,
    girth_cycle_count,
    is_convex_cycle,
    odd_antipodal_pairs,
)
from .errors import (
    ConsistencyError,
    ConvexCyclesError,
    Disconnected,
    DuplicateEdge,
    InconsistentInput,
    InvalidCycle,
    InvalidEdge,
    InvalidParameter,
    NotApplicable,
    OutOfRange,
    ParseError,
)
from .extremal import (
    Classification,
    ExtremalReport,
    MooreCountCheck,
    MooreReport,
    check_extremal,
    check_moore_by_count,
    convex_cycle_bound,
    is_moore,
)
from .formats import (
    load_graph_text,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .graphs import (
    Edge,
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    delete_vertex,
    from_edge_list,
    generate,
    gnp_random_graph,
    hoffman_singleton_graph,
    petersen_graph,
)
from .metric import (
    DistanceRecord,
    MetricProfile,
    bfs_record,
    diameter,
    girth,
    metric_profile,
    two_shortest_paths,
    unique_shortest_path,
)
from .spectral import (
    IntPolynomial,
    char_poly,
    expand_factored,
    girth_cycle_count_spectral,
)

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "ConsistencyError",
    "ConvexCyclesError",
    "Cycle",
    "CycleCensus",
    "Disconnected",
    "DistanceRecord",
    "DuplicateEdge",
    "Edge",
    "EvenAntipodalPair",
    "ExtremalReport",
    "Graph",
    "InconsistentInput",
    "IntPolynomial",
    "InvalidCycle",
    "InvalidEdge",
    "InvalidParameter",
    "MetricProfile",
    "MooreCountCheck",
    "MooreReport",
    "NotApplicable",
    "OddAntipodalPair",
    "OutOfRange",
    "ParseError",
    "bfs_record",
    "brute_force_convex_cycles",
    "canonical_cycle",
    "char_poly",
    "check_extremal",
    "check_moore_by_count",
    "cli_run",
    "complete_bipartite_graph",
    "complete_graph",
    "convex_cycle_bound",
    "cycle_graph",
    "delete_vertex",
    "diameter",
    "enumerate_convex_cycles",
    "even_antipodal_pairs",
    "expand_factored",
    "from_edge_list",
    "generate",
    "girth",
    "girth_cycle_count",
    "girth_cycle_count_spectral",
    "gnp_random_graph",
    "hoffman_singleton_graph",
    "is_convex_cycle",
    "is_moore",
    "load_graph_text",
    "metric_profile",
    "odd_antipodal_pairs",
    "parse_edge_list",
    "parse_graph6",
    "petersen_graph",
    "two_shortest_paths",
    "unique_shortest_path",
    "write_edge_list",
    "write_graph6",
]
