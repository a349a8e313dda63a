"""Internal links and pairs in bipartite graphs.

A link is internal when deleting it leaves the one-mode projection
unchanged; a non-adjacent pair is internal when adding it would. This
package detects both without materializing projections, compares real
graphs against degree-preserving random ones, prunes redundant links,
and reports per-node distributions.
"""

__version__ = "0.1.0"

from .graph import (
    BipartiteGraph,
    DuplicateEdgeError,
    GraphError,
    IncomparableError,
    InvalidNodeError,
    MissingEdgeError,
    NodeId,
    ParseError,
    ProjectionGraph,
    Side,
    graph_to_string,
    load_graph,
    project,
    projection_equal,
    write_graph,
    write_projection,
)
from .internal import (
    InternalLinkSet,
    InternalPairCount,
    NodeStats,
    NoNonEdgesError,
    count_analyzed_links,
    count_internal_pairs_exact,
    enumerate_internal_links,
    estimate_internal_pairs,
    is_internal_link,
    is_internal_link_oracle,
    is_internal_pair,
    is_internal_pair_oracle,
    link_passes_filter,
    node_stats,
    redundancy,
)
from .nullmodel import (
    CannotSwapError,
    RandomizeResult,
    SwapConfig,
    randomize,
    sample_batch,
    swap_candidate_valid,
)
from .prune import (
    PruneResult,
    PruneTrajectory,
    affected_links,
    prune_random,
    trajectory_to_string,
    write_trajectory,
)
from .stats import (
    CcdfSeries,
    DegreeCorrelationSeries,
    EmptyPopulationError,
    InternalReport,
    SideReport,
    ccdf_internal_fraction,
    compute_report,
    degree_vs_internal_degree,
    render_ccdf_tsv,
    render_degcorr_tsv,
    render_report_text,
    render_report_tsv,
)

__all__ = [
    "BipartiteGraph",
    "CannotSwapError",
    "CcdfSeries",
    "DegreeCorrelationSeries",
    "DuplicateEdgeError",
    "EmptyPopulationError",
    "GraphError",
    "IncomparableError",
    "InternalLinkSet",
    "InternalPairCount",
    "InternalReport",
    "InvalidNodeError",
    "MissingEdgeError",
    "NoNonEdgesError",
    "NodeId",
    "NodeStats",
    "ParseError",
    "ProjectionGraph",
    "PruneResult",
    "PruneTrajectory",
    "RandomizeResult",
    "Side",
    "SideReport",
    "SwapConfig",
    "affected_links",
    "ccdf_internal_fraction",
    "compute_report",
    "count_analyzed_links",
    "count_internal_pairs_exact",
    "degree_vs_internal_degree",
    "enumerate_internal_links",
    "estimate_internal_pairs",
    "graph_to_string",
    "is_internal_link",
    "is_internal_link_oracle",
    "is_internal_pair",
    "is_internal_pair_oracle",
    "link_passes_filter",
    "load_graph",
    "node_stats",
    "project",
    "projection_equal",
    "prune_random",
    "randomize",
    "redundancy",
    "render_ccdf_tsv",
    "render_degcorr_tsv",
    "render_report_text",
    "render_report_tsv",
    "sample_batch",
    "swap_candidate_valid",
    "trajectory_to_string",
    "write_graph",
    "write_projection",
    "write_trajectory",
]
