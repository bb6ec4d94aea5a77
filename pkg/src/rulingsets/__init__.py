"""Deterministic CONGEST simulation and ruling-set algorithms with
brute-force verification."""

from .coloring import (
    Coloring,
    Matching,
    linial_color_count,
    linial_coloring,
    maximal_matching_bounded_degree,
)
from .colorreduce import COLOR_BOUND_FACTOR, color_bound
from .digitruling import (
    DigitSchedule,
    RulingSet,
    bary_ruling_set,
    bounded_bfs_flags,
    ruling_set_from_ids,
    smallest_base_for,
    two_beta_ruling_set,
)
from .diversity import (
    VertexKernel,
    diversity_proposal,
    diversity_ruling_set,
    hypergraph_edge_ruling_set,
    ruling_from_vertex_kernel,
)
from .edgesets import (
    EdgeKernel,
    RulingEdgeSet,
    edge_ruling_to_vertex_ruling,
    matching_as_ruling,
    propose_edge_kernel,
    reduce_3_to_2,
    reduce_beta_by_one,
    reduce_beta_to_2,
    ruling_edge_from_kernel,
    three_ruling_edge_set,
    two_ruling_edge_set,
)
from .generators import generate
from .graph import (
    CliqueEdgeCover,
    Graph,
    Hypergraph,
    canonical_edge,
    edge_distance,
    hyper_line_graph_with_cover,
    line_graph,
    log_star,
    power_graph,
    trivial_edge_clique_cover,
)
from .sim import (
    Message,
    MessageCapExceeded,
    NodeProgram,
    NonTermination,
    RunReport,
    SimConfig,
    run,
    run_hypergraph,
)
from .verify import (
    Verdict,
    Violation,
    edge_set_distances,
    plant_ruling_edge_set,
    verify_cover,
    verify_coloring,
    verify_edge_kernel,
    verify_matching,
    verify_ruling_edge_set,
    verify_ruling_set,
    verify_vertex_kernel,
)

__all__ = [name for name in dir() if not name.startswith("_")]
