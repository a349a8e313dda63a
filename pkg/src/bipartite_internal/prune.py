"""Random deletion of internal links down to a minimal bipartite encoding.

Each step removes one uniformly chosen eligible internal link and updates
the eligible set incrementally; the loop ends when no eligible internal
link remains.  Because a link that is internal in the current graph can be
removed without touching the projection, the final graph's projection is
edge-for-edge the original's, making it a compressed encoding of that
projection.

Removing a link can strip internal status from nearby links (never grant
it), so the eligible set only ever shrinks: after x removals at most
E_I - x internal links can remain, which is the trajectory's upper bound.
"""

from __future__ import annotations

import io
import random
from dataclasses import dataclass
from typing import TextIO

from .graph import BipartiteGraph, Side, graph_to_string
from .internal import is_internal_link, link_passes_filter

# Eligibility policies: "all" admits every side-internal link (maximal
# compression; degree-1 links are safe to drop too); "filtered" restricts
# to links whose endpoints both keep degree >= 2, mirroring the statistics
# convention.
POLICIES = ("all", "filtered")


@dataclass
class PruneTrajectory:
    """Deletion-process trace: eligible internal links left after each removal."""

    side: Side
    initial_internal: int
    points: list[tuple[int, int]]  # (removals so far, remaining eligible internal)
    removed_edges: list[tuple[int, int]]
    seed: int
    eligibility: str


@dataclass
class PruneResult:
    """Pruned graph plus its trajectory and compression accounting.

    ``compression_ratio`` is pruned/original edge count; byte fields
    compare canonical serialization sizes of the two graphs.
    """

    pruned_graph: BipartiteGraph
    trajectory: PruneTrajectory
    compression_ratio: float
    original_edge_count: int
    pruned_edge_count: int
    original_bytes: int
    pruned_bytes: int
    byte_ratio: float


def _eligible(g: BipartiteGraph, u: int, v: int, side: Side, policy: str) -> bool:
    if policy == "filtered" and not link_passes_filter(g, u, v):
        return False
    return is_internal_link(g, u, v, side)


def affected_links(
    g: BipartiteGraph, u: int, v: int, side: Side
) -> set[tuple[int, int]]:
    """Edges whose internal status may have changed after removing (u, v).

    Evaluated on the post-removal graph: every edge incident to a current
    neighbor of either removed endpoint (which covers the endpoints' own
    remaining edges).  This 2-hop superset is deliberately conservative and
    valid for either analysis side; any edge outside it sees none of the
    neighborhoods the internal-link condition reads.
    """
    out: set[tuple[int, int]] = set()
    for t in g.bottom_adj[u]:
        for b in g.top_adj[t]:
            out.add((b, t))
    for b in g.top_adj[v]:
        for t in g.bottom_adj[b]:
            out.add((b, t))
    return out


def prune_random(
    g: BipartiteGraph, side: Side, seed: int, eligibility: str = "all"
) -> PruneResult:
    """Remove uniformly chosen eligible internal links until none remain.

    Operates on a copy of ``g``.  After each removal only the affected
    2-hop edges are re-tested; links can leave the eligible pool but never
    re-enter it, so the incremental update is exhaustive.  Deterministic
    for a given (graph, side, seed, eligibility).
    """
    if eligibility not in POLICIES:
        raise ValueError(f"unknown eligibility policy {eligibility!r}; expected one of {POLICIES}")
    work = g.copy()
    rng = random.Random(seed)

    pool: list[tuple[int, int]] = [
        (u, v) for u, v in work.edges() if _eligible(work, u, v, side, eligibility)
    ]
    pos = {e: i for i, e in enumerate(pool)}
    initial = len(pool)
    points = [(0, initial)]
    removed: list[tuple[int, int]] = []

    def pool_discard(e: tuple[int, int]) -> None:
        i = pos.pop(e)
        last = pool.pop()
        if i < len(pool):
            pool[i] = last
            pos[last] = i

    while pool:
        u, v = pool[rng.randrange(len(pool))]
        pool_discard((u, v))
        work.remove_link(u, v)
        removed.append((u, v))
        for e in sorted(affected_links(work, u, v, side)):
            if e in pos and not _eligible(work, e[0], e[1], side, eligibility):
                pool_discard(e)
        points.append((len(removed), len(pool)))

    trajectory = PruneTrajectory(
        side=side,
        initial_internal=initial,
        points=points,
        removed_edges=removed,
        seed=seed,
        eligibility=eligibility,
    )
    original_bytes = len(graph_to_string(g).encode("utf-8"))
    pruned_bytes = len(graph_to_string(work).encode("utf-8"))
    return PruneResult(
        pruned_graph=work,
        trajectory=trajectory,
        compression_ratio=work.edge_count / g.edge_count if g.edge_count else 1.0,
        original_edge_count=g.edge_count,
        pruned_edge_count=work.edge_count,
        original_bytes=original_bytes,
        pruned_bytes=pruned_bytes,
        byte_ratio=pruned_bytes / original_bytes if original_bytes else 1.0,
    )


def write_trajectory(t: PruneTrajectory, sink: TextIO) -> None:
    """TSV trace: removals, remaining eligible internal links, and the
    E_I - x upper bound, one row per step including step 0."""
    sink.write("removals\tremaining_internal\tupper_bound\n")
    for removals, remaining in t.points:
        bound = max(t.initial_internal - removals, 0)
        sink.write(f"{removals}\t{remaining}\t{bound}\n")


def trajectory_to_string(t: PruneTrajectory) -> str:
    buf = io.StringIO()
    write_trajectory(t, buf)
    return buf.getvalue()
