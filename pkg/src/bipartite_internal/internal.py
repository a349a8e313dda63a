"""Detection and counting of internal links and pairs.

An edge is internal with respect to one side when removing it leaves that
side's projection unchanged; a non-adjacent (bottom, top) pair is internal
when adding it as an edge leaves the projection unchanged.

Every predicate here takes the edge/pair in canonical index order (bottom
node first, top node second) plus the projection side under analysis.  The
fast paths work purely on bipartite adjacency and never materialize a
projection; the ``*_oracle`` variants do materialize projections and exist
as ground truth for tests.

All operations are read-only over the graph and safe to run concurrently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from statistics import NormalDist

from .graph import (
    BipartiteGraph,
    DuplicateEdgeError,
    MissingEdgeError,
    NodeId,
    Side,
    project,
    projection_equal,
    sorted_intersects,
)

_Z95 = NormalDist().inv_cdf(0.975)


class NoNonEdgesError(Exception):
    """Sampling requested on a complete bipartite graph (no non-edges)."""


def is_internal_link(g: BipartiteGraph, u: int, v: int, side: Side) -> bool:
    """Fast internal-link test for edge (bottom u, top v).

    The edge is side-internal iff every other neighbor of its opposite-side
    endpoint still shares some neighbor with the side endpoint once this
    edge is ignored.  Checked neighbor by neighbor with short-circuit on
    the first failure; no projection is built.
    """
    if not g.has_edge(u, v):
        raise MissingEdgeError(f"({u}, {v}) is not an edge")
    if side is Side.BOTTOM:
        own, s, t = g.bottom_adj, u, v
        opp = g.top_adj
    else:
        own, s, t = g.top_adj, v, u
        opp = g.bottom_adj
    a_s = own[s]
    for x in opp[t]:
        if x == s:
            continue
        # witness: a shared neighbor of x and s other than t itself
        if not sorted_intersects(own[x], a_s, exclude=t):
            return False
    return True


def is_internal_link_oracle(g: BipartiteGraph, u: int, v: int, side: Side) -> bool:
    """Ground-truth internal-link test: remove on a copy, compare projections."""
    if not g.has_edge(u, v):
        raise MissingEdgeError(f"({u}, {v}) is not an edge")
    before = project(g, side)
    g2 = g.copy()
    g2.remove_link(u, v)
    return projection_equal(before, project(g2, side))


def is_internal_pair(g: BipartiteGraph, u: int, v: int, side: Side) -> bool:
    """Fast internal-pair test for non-edge (bottom u, top v).

    Adding (u, v) adds to the side projection exactly the links from the
    side endpoint to the opposite endpoint's current neighbors, so the pair
    is internal iff each of those neighbors already shares some bipartite
    neighbor with the side endpoint.  Validated against the add-and-project
    oracle in the test suite.
    """
    g.check_node(Side.BOTTOM, u)
    g.check_node(Side.TOP, v)
    if g.has_edge(u, v):
        raise DuplicateEdgeError(f"({u}, {v}) is already an edge")
    if side is Side.BOTTOM:
        own, p = g.bottom_adj, u
        opp, q = g.top_adj, v
    else:
        own, p = g.top_adj, v
        opp, q = g.bottom_adj, u
    a_p = own[p]
    for x in opp[q]:
        if x == p:
            continue
        if not sorted_intersects(own[x], a_p):
            return False
    return True


def is_internal_pair_oracle(g: BipartiteGraph, u: int, v: int, side: Side) -> bool:
    """Ground-truth internal-pair test: add on a copy, compare projections."""
    if g.has_edge(u, v):
        raise DuplicateEdgeError(f"({u}, {v}) is already an edge")
    before = project(g, side)
    g2 = g.copy()
    g2.add_link(u, v)
    return projection_equal(before, project(g2, side))


def link_passes_filter(g: BipartiteGraph, u: int, v: int) -> bool:
    """Degree filter: both endpoints of the edge have degree at least 2."""
    return len(g.bottom_adj[u]) >= 2 and len(g.top_adj[v]) >= 2


def count_analyzed_links(g: BipartiteGraph, apply_degree_filter: bool) -> int:
    """Number of edges that survive the degree filter (all edges if off)."""
    if not apply_degree_filter:
        return g.edge_count
    return sum(1 for u, v in g.edges() if link_passes_filter(g, u, v))


@dataclass
class InternalLinkSet:
    """Side-internal edges of a graph, as sorted (bottom, top) index pairs."""

    side: Side
    links: list[tuple[int, int]]
    filtered: bool

    def __len__(self) -> int:
        return len(self.links)


def enumerate_internal_links(
    g: BipartiteGraph, side: Side, apply_degree_filter: bool = True
) -> InternalLinkSet:
    """All side-internal edges, in sorted (bottom, top) order.

    With the filter on, only edges whose two endpoints both have degree at
    least 2 are candidates; the rest are skipped without testing.
    """
    links = [
        (u, v)
        for u, v in g.edges()
        if (not apply_degree_filter or link_passes_filter(g, u, v))
        and is_internal_link(g, u, v, side)
    ]
    return InternalLinkSet(side=side, links=links, filtered=apply_degree_filter)


@dataclass
class InternalPairCount:
    """Count of side-internal pairs: exact, or a sampled estimate.

    Exactly one of ``exact_count`` / ``estimate`` is set.  ``estimate`` is
    (mean, 95% confidence half-width) scaled to the full non-edge count.
    """

    side: Side
    exact_count: int | None = None
    estimate: tuple[float, float] | None = None
    sample_size: int | None = None

    @property
    def point_value(self) -> float:
        return float(self.exact_count) if self.exact_count is not None else self.estimate[0]


def count_internal_pairs_exact(
    g: BipartiteGraph,
    side: Side,
    apply_degree_filter: bool = False,
    include_isolated_opposite: bool = False,
) -> InternalPairCount:
    """Exact number of side-internal pairs.

    Enumerates per opposite-side node q: the side nodes pairable with q are
    those linked (in the projection sense) to every current neighbor of q,
    computed by intersecting candidate sets starting from q's smallest
    neighborhood, then dropping q's actual neighbors.

    Pairs whose opposite endpoint has degree 0 are vacuously internal; they
    are excluded by default and counted only when
    ``include_isolated_opposite`` is set.  With the degree filter on, both
    pair endpoints must have degree >= 2 (mirrors the link filter).
    """
    own = g.adj(side)
    opp = g.adj(side.opposite())
    n_side = g.side_count(side)
    total = 0
    for q in range(len(opp)):
        members = opp[q]
        if apply_degree_filter and len(members) < 2:
            continue
        if not members:
            if include_isolated_opposite:
                total += n_side
            continue
        order = sorted(members, key=lambda x: len(own[x]))
        x0 = order[0]
        cands: set[int] = set()
        for t in own[x0]:
            cands.update(opp[t])
        for x in order[1:]:
            if not cands:
                break
            ax = own[x]
            cands = {c for c in cands if c == x or sorted_intersects(own[c], ax)}
        cands.difference_update(members)
        if apply_degree_filter:
            total += sum(1 for c in cands if len(own[c]) >= 2)
        else:
            total += len(cands)
    return InternalPairCount(side=side, exact_count=total)


def _pair_indicator(
    g: BipartiteGraph,
    u: int,
    v: int,
    side: Side,
    apply_degree_filter: bool,
    include_isolated_opposite: bool,
) -> bool:
    """Does non-edge (u, v) count toward the pair tally under these flags?"""
    if side is Side.BOTTOM:
        dp, dq = len(g.bottom_adj[u]), len(g.top_adj[v])
    else:
        dp, dq = len(g.top_adj[v]), len(g.bottom_adj[u])
    if apply_degree_filter and (dp < 2 or dq < 2):
        return False
    if dq == 0 and not include_isolated_opposite:
        return False
    return is_internal_pair(g, u, v, side)


def estimate_internal_pairs(
    g: BipartiteGraph,
    side: Side,
    sample_size: int,
    seed: int,
    apply_degree_filter: bool = False,
    include_isolated_opposite: bool = False,
) -> InternalPairCount:
    """Monte Carlo estimate of the side-internal pair count.

    Samples non-edges uniformly by rejection over the full bottom x top
    grid, tests each with the same indicator the exact counter uses, and
    scales the hit fraction by the total non-edge count.  The half-width is
    the binomial-proportion 95% interval.  Deterministic for a given seed.
    """
    if sample_size < 1:
        raise ValueError("sample_size must be >= 1")
    cells = g.bottom_count * g.top_count
    non_edges = cells - g.edge_count
    if non_edges <= 0:
        raise NoNonEdgesError("graph is complete bipartite; no non-edges to sample")
    rng = random.Random(seed)
    hits = 0
    for _ in range(sample_size):
        while True:
            u = rng.randrange(g.bottom_count)
            v = rng.randrange(g.top_count)
            if not g.has_edge(u, v):
                break
        if _pair_indicator(g, u, v, side, apply_degree_filter, include_isolated_opposite):
            hits += 1
    p_hat = hits / sample_size
    mean = p_hat * non_edges
    half = _Z95 * (p_hat * (1.0 - p_hat) / sample_size) ** 0.5 * non_edges
    return InternalPairCount(side=side, estimate=(mean, half), sample_size=sample_size)


def redundancy(g: BipartiteGraph, side: Side, index: int) -> float | None:
    """Redundancy coefficient of one node (None when degree < 2).

    Fraction of pairs of the node's neighbors that stay projection-linked
    after the node and its links are withdrawn, i.e. pairs with a common
    neighbor other than this node.
    """
    g.check_node(side, index)
    nbrs = g.adj(side)[index]
    d = len(nbrs)
    if d < 2:
        return None
    opp = g.adj(side.opposite())
    hits = 0
    for i in range(d):
        ai = opp[nbrs[i]]
        for j in range(i + 1, d):
            if sorted_intersects(ai, opp[nbrs[j]], exclude=index):
                hits += 1
    return hits / (d * (d - 1) // 2)


@dataclass
class NodeStats:
    """Per-node degree and internal-link statistics for one analysis side.

    ``analyzed_degree`` counts the node's filter-passing edges (equals
    ``degree`` when the filter is off); ``internal_fraction`` is
    internal_degree / analyzed_degree, undefined (None) when the node has
    no analyzed links.  ``redundancy`` is None for degree < 2.
    """

    node: NodeId
    degree: int
    analyzed_degree: int
    internal_degree: int
    internal_fraction: float | None
    redundancy: float | None


def node_stats(
    g: BipartiteGraph, side: Side, apply_degree_filter: bool = True
) -> list[NodeStats]:
    """Per-node statistics for the side-internal analysis.

    Covers every node on the projected side plus every opposite-side node
    incident to at least one analyzed link.  Internal degrees are read off
    one enumeration of the side-internal link set.
    """
    link_set = enumerate_internal_links(g, side, apply_degree_filter)
    int_deg = {
        Side.BOTTOM: [0] * g.bottom_count,
        Side.TOP: [0] * g.top_count,
    }
    for u, v in link_set.links:
        int_deg[Side.BOTTOM][u] += 1
        int_deg[Side.TOP][v] += 1
    ana_deg = {
        Side.BOTTOM: [0] * g.bottom_count,
        Side.TOP: [0] * g.top_count,
    }
    for u, v in g.edges():
        if not apply_degree_filter or link_passes_filter(g, u, v):
            ana_deg[Side.BOTTOM][u] += 1
            ana_deg[Side.TOP][v] += 1

    def stats_for(s: Side, i: int) -> NodeStats:
        deg = len(g.adj(s)[i])
        ana = ana_deg[s][i]
        internal = int_deg[s][i]
        return NodeStats(
            node=NodeId(s, i),
            degree=deg,
            analyzed_degree=ana,
            internal_degree=internal,
            internal_fraction=internal / ana if ana > 0 else None,
            redundancy=redundancy(g, s, i),
        )

    out = [stats_for(side, i) for i in range(g.side_count(side))]
    other = side.opposite()
    out.extend(
        stats_for(other, j)
        for j in range(g.side_count(other))
        if ana_deg[other][j] > 0
    )
    return out
