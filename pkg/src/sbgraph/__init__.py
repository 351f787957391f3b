"""Connectivity analysis for strongly biconnected directed graphs.

Strongly biconnected components, b-bridges and b-articulation points,
and the four 2-block families of a digraph, with enumeration oracles for
every fast path and a deterministic CLI on top.
"""

from ._kernels import available_backends, backend_name
from .blocks import (
    RelationMatrix,
    edge_relation,
    helper_graph,
    oracle_two_edge_biconnected_blocks,
    two_edge_biconnected_blocks,
    two_edge_blocks,
    two_strong_biconnected_blocks,
    two_strong_blocks,
    vertex_relation,
)
from .checks import OracleCheckReport, oracle_check
from .connectivity import (
    BlockDecomposition,
    is_biconnected,
    is_strongly_biconnected,
    is_strongly_connected,
    strongly_connected_components,
    undirected_blocks,
)
from .dot import export_dot
from .edgelist import emit_edge_list, parse_edge_list
from .errors import (
    DuplicateEdgeError,
    EdgeListParseError,
    GenerationBudgetError,
    GraphError,
    GuardError,
    MissingEdgeError,
    NotStronglyBiconnectedError,
    NotStronglyConnectedError,
    SelfLoopError,
    VertexRangeError,
)
from .generate import SplitMix64, gen_random_sb
from .graph import (
    Digraph,
    UndirectedGraph,
    build_digraph,
    induced_subgraph,
    remove_edge,
    remove_vertex,
    underlying,
)
from .report import AnalysisReport, analyze, emit_report, report_schema
from .resilience import (
    CutReport,
    b_articulation_points,
    b_bridges,
    components_2esb,
    components_2vsb,
    cut_report,
    is_2_edge_strongly_biconnected,
    is_2_vertex_strongly_biconnected,
)
from .sbc import (
    SbcDecomposition,
    same_sbc,
    sbc_oracle,
    strongly_biconnected_components,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BlockDecomposition",
    "CutReport",
    "Digraph",
    "DuplicateEdgeError",
    "EdgeListParseError",
    "GenerationBudgetError",
    "GraphError",
    "GuardError",
    "MissingEdgeError",
    "NotStronglyBiconnectedError",
    "NotStronglyConnectedError",
    "OracleCheckReport",
    "RelationMatrix",
    "SbcDecomposition",
    "SelfLoopError",
    "SplitMix64",
    "UndirectedGraph",
    "VertexRangeError",
    "analyze",
    "available_backends",
    "b_articulation_points",
    "b_bridges",
    "backend_name",
    "build_digraph",
    "components_2esb",
    "components_2vsb",
    "cut_report",
    "edge_relation",
    "emit_edge_list",
    "emit_report",
    "export_dot",
    "gen_random_sb",
    "helper_graph",
    "induced_subgraph",
    "is_2_edge_strongly_biconnected",
    "is_2_vertex_strongly_biconnected",
    "is_biconnected",
    "is_strongly_biconnected",
    "is_strongly_connected",
    "oracle_check",
    "oracle_two_edge_biconnected_blocks",
    "parse_edge_list",
    "remove_edge",
    "remove_vertex",
    "report_schema",
    "same_sbc",
    "sbc_oracle",
    "strongly_biconnected_components",
    "strongly_connected_components",
    "two_edge_biconnected_blocks",
    "two_edge_blocks",
    "two_strong_biconnected_blocks",
    "two_strong_blocks",
    "underlying",
    "undirected_blocks",
    "vertex_relation",
]
