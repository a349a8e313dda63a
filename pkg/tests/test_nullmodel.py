import random

import pytest

from bipartite_internal import (
    BipartiteGraph,
    CannotSwapError,
    SwapConfig,
    graph_to_string,
    randomize,
    sample_batch,
    swap_candidate_valid,
)
from helpers import assert_graph_valid, build, random_bipartite


def test_swap_validity_on_path():
    g = build([("A", "i"), ("B", "i"), ("B", "j"), ("C", "j")])
    ai, bi, bj, cj = (0, 0), (1, 0), (1, 1), (2, 1)
    # rewiring (A,i),(B,j) would recreate the existing edge (B,i)
    assert not swap_candidate_valid(g, ai, bj)
    # the end edges swap cleanly into (A,j),(C,i)
    assert swap_candidate_valid(g, ai, cj)
    # shared endpoints are never swappable
    assert not swap_candidate_valid(g, ai, bi)
    assert not swap_candidate_valid(g, bi, bj)


def test_no_valid_swap_in_complete_graph(four_cycle):
    edges = list(four_cycle.edges())
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            assert not swap_candidate_valid(four_cycle, edges[i], edges[j])


def test_randomize_preserves_degrees_and_simplicity():
    rng = random.Random(2)
    for _ in range(30):
        g = random_bipartite(rng, 8, 8, 0.35)
        if g.edge_count < 2:
            continue
        res = randomize(g, SwapConfig(seed=rng.randrange(10**6)))
        assert res.graph.degree_sequences() == g.degree_sequences()
        assert res.graph.edge_count == g.edge_count
        assert res.attempted == res.accepted + res.rejected
        assert_graph_valid(res.graph)


def test_randomize_deterministic():
    g = random_bipartite(random.Random(4), 10, 10, 0.3)
    a = randomize(g, SwapConfig(seed=7))
    b = randomize(g, SwapConfig(seed=7))
    assert a.graph.same_edges(b.graph)
    assert (a.attempted, a.accepted, a.rejected) == (b.attempted, b.accepted, b.rejected)


def test_randomize_actually_rewires():
    g = random_bipartite(random.Random(5), 12, 12, 0.25)
    res = randomize(g, SwapConfig(seed=3))
    assert res.accepted > 0
    assert not res.graph.same_edges(g)


def test_randomize_leaves_input_untouched():
    g = random_bipartite(random.Random(6), 8, 8, 0.3)
    before = graph_to_string(g)
    randomize(g, SwapConfig(seed=1))
    assert graph_to_string(g) == before


def test_rigid_graph_returned_unchanged(four_cycle):
    # default budget (40 attempts) ends before the rejection guard (400)
    res = randomize(four_cycle, SwapConfig())
    assert res.graph.same_edges(four_cycle)
    assert res.accepted == 0
    assert not res.saturated


def test_rigid_graph_trips_saturation_guard(four_cycle):
    # guard below budget: 40 straight rejections end the run early
    res = randomize(four_cycle, SwapConfig(swaps_per_edge=50, max_rejections_factor=10))
    assert res.saturated
    assert res.graph.same_edges(four_cycle)
    assert res.attempted == 40
    assert res.accepted == 0


def test_randomize_needs_two_edges():
    with pytest.raises(CannotSwapError):
        randomize(build([("A", "i")]), SwapConfig())
    with pytest.raises(CannotSwapError):
        randomize(BipartiteGraph(), SwapConfig())


def test_sample_batch_is_reproducible_and_diverse():
    g = random_bipartite(random.Random(6), 10, 10, 0.3)
    batch = sample_batch(g, SwapConfig(seed=1), 3)
    assert len({graph_to_string(r.graph) for r in batch}) == 3
    # sample k equals a standalone run with seed + k
    solo = randomize(g, SwapConfig(seed=2))
    assert batch[1].graph.same_edges(solo.graph)
    again = sample_batch(g, SwapConfig(seed=1), 3)
    for r1, r2 in zip(batch, again):
        assert r1.graph.same_edges(r2.graph)


def test_sample_batch_validates_count(four_cycle):
    with pytest.raises(ValueError):
        sample_batch(four_cycle, SwapConfig(), 0)


def test_config_validation():
    with pytest.raises(ValueError):
        SwapConfig(swaps_per_edge=0)
    with pytest.raises(ValueError):
        SwapConfig(max_rejections_factor=0)
