"""Degree-preserving random bipartite graphs via double-edge swaps.

The benchmark model: graphs with the same per-node degrees on both sides,
sampled by repeatedly picking two edges (a,b), (c,d) and rewiring them to
(a,d), (c,b) whenever that keeps the graph simple.  Swaps preserve every
degree exactly, which stub-matching samplers do not once multi-edges have
to be erased.  Rejected proposals count toward the attempt budget (standard
Markov-chain semantics).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace

from .graph import BipartiteGraph, GraphError


class CannotSwapError(GraphError):
    """Randomization needs at least two edges."""


@dataclass(frozen=True)
class SwapConfig:
    """Parameters of the swap randomizer.

    swaps_per_edge: attempted swaps per edge of the input graph.
    max_rejections_factor: bail out after this many times |E| consecutive
        rejections (e.g. complete bipartite graphs admit no swap at all).
    """

    swaps_per_edge: float = 10.0
    seed: int = 1
    max_rejections_factor: int = 100

    def __post_init__(self) -> None:
        if self.swaps_per_edge <= 0:
            raise ValueError("swaps_per_edge must be positive")
        if self.max_rejections_factor <= 0:
            raise ValueError("max_rejections_factor must be positive")


@dataclass
class RandomizeResult:
    """Randomized graph plus chain accounting."""

    graph: BipartiteGraph
    attempted: int
    accepted: int
    rejected: int
    saturated: bool  # stopped early on a full run of consecutive rejections


def swap_candidate_valid(g: BipartiteGraph, e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    """Would rewiring edges (a,b),(c,d) into (a,d),(c,b) keep g simple?"""
    a, b = e1
    c, d = e2
    return a != c and b != d and not g.has_edge(a, d) and not g.has_edge(c, b)


def randomize(g: BipartiteGraph, cfg: SwapConfig) -> RandomizeResult:
    """Degree-preserving randomization of a copy of ``g``.

    Attempts ceil(swaps_per_edge * |E|) double-edge swaps drawn uniformly
    over distinct edge pairs.  Output keeps both degree sequences exactly
    and stays simple.  Deterministic for a given config.
    """
    if g.edge_count < 2:
        raise CannotSwapError(f"need at least 2 edges to swap, have {g.edge_count}")
    work = g.copy()
    edges = list(work.edges())
    m = len(edges)
    rng = random.Random(cfg.seed)
    budget = math.ceil(cfg.swaps_per_edge * m)
    max_consecutive = cfg.max_rejections_factor * m
    consecutive = accepted = rejected = attempts = 0
    while attempts < budget:
        attempts += 1
        i = rng.randrange(m)
        j = rng.randrange(m - 1)
        if j >= i:
            j += 1
        a, b = edges[i]
        c, d = edges[j]
        if swap_candidate_valid(work, (a, b), (c, d)):
            work.remove_link(a, b)
            work.remove_link(c, d)
            work.add_link(a, d)
            work.add_link(c, b)
            edges[i] = (a, d)
            edges[j] = (c, b)
            accepted += 1
            consecutive = 0
        else:
            rejected += 1
            consecutive += 1
            if consecutive >= max_consecutive:
                return RandomizeResult(work, attempts, accepted, rejected, saturated=True)
    return RandomizeResult(work, attempts, accepted, rejected, saturated=False)


def sample_batch(g: BipartiteGraph, cfg: SwapConfig, n_samples: int) -> list[RandomizeResult]:
    """n independent randomizations of the original graph.

    Sample k uses seed cfg.seed + k; every sample starts from ``g``, not
    from the previous sample.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    return [randomize(g, replace(cfg, seed=cfg.seed + k)) for k in range(n_samples)]
