"""End-to-end acceptance checks, one test per numbered criterion; run with
-v to get the per-criterion pass/fail summary as one line each."""

import io
import random
import time

from bipartite_internal import (
    BipartiteGraph,
    EmptyPopulationError,
    Side,
    SwapConfig,
    ccdf_internal_fraction,
    count_analyzed_links,
    compute_report,
    enumerate_internal_links,
    is_internal_link,
    is_internal_link_oracle,
    is_internal_pair,
    is_internal_pair_oracle,
    node_stats,
    project,
    projection_equal,
    prune_random,
    randomize,
    redundancy,
    write_projection,
)
from bipartite_internal.cli import main as cli_main
from helpers import assert_graph_valid, brute_redundancy, build, random_bipartite


def _graph_family(count, seed, max_side=12):
    rng = random.Random(seed)
    ps = (0.1, 0.3, 0.5)
    for k in range(count):
        nb = 1 + (k * 7 + 3) % max_side
        nt = 1 + (k * 5 + 1) % max_side
        yield random_bipartite(rng, nb, nt, ps[k % 3])


def test_criterion_01_fast_link_test_equals_removal_oracle():
    start = time.monotonic()
    graphs = checks = 0
    for g in _graph_family(1002, seed=1729):
        graphs += 1
        for side in Side:
            for u, v in g.edges():
                checks += 1
                assert is_internal_link(g, u, v, side) == is_internal_link_oracle(
                    g, u, v, side
                )
    elapsed = time.monotonic() - start
    assert graphs >= 1000
    assert elapsed < 60
    print(f"[criterion 1] PASS: {checks} link checks on {graphs} graphs in {elapsed:.1f}s")


def test_criterion_02_fast_pair_test_equals_addition_oracle():
    graphs = checks = 0
    for g in _graph_family(1002, seed=2718):
        graphs += 1
        for side in Side:
            for u in range(g.bottom_count):
                for v in range(g.top_count):
                    if g.has_edge(u, v):
                        continue
                    checks += 1
                    assert is_internal_pair(g, u, v, side) == is_internal_pair_oracle(
                        g, u, v, side
                    )
    assert graphs >= 1000
    print(f"[criterion 2] PASS: {checks} pair checks on {graphs} graphs")


def test_criterion_03_degree_one_endpoints_make_links_internal():
    checks = 0
    for g in _graph_family(300, seed=57):
        for u, v in g.edges():
            if g.degree(Side.TOP, v) == 1:
                checks += 1
                assert is_internal_link(g, u, v, Side.BOTTOM)
            if g.degree(Side.BOTTOM, u) == 1:
                checks += 1
                assert is_internal_link(g, u, v, Side.TOP)
    assert checks > 0
    print(f"[criterion 3] PASS: {checks} degree-1 links, all internal")


def test_criterion_04_hub_cover_fixture_cascade(covered_hub):
    g = covered_hub
    assert g.edge_count == 10
    a_i, b_j, c_k, d_l = (0, 0), (1, 1), (2, 2), (3, 3)
    for u, v in (a_i, b_j, c_k, d_l):
        assert is_internal_link_oracle(g, u, v, Side.BOTTOM)
        assert is_internal_link(g, u, v, Side.BOTTOM)
    h = g.copy()
    h.remove_link(*a_i)
    for u, v in (b_j, c_k, d_l):
        assert not is_internal_link(h, u, v, Side.BOTTOM)
        assert not is_internal_link_oracle(h, u, v, Side.BOTTOM)
    print("[criterion 4] PASS: hub-cover fixture cascades as constructed")


def _eligible_count(g, side, filtered):
    return len(enumerate_internal_links(g, side, apply_degree_filter=filtered))


def _replay_and_check(g, side, policy, res):
    base = project(g, side)
    filtered = policy == "filtered"
    pts = res.trajectory.points
    assert pts[0] == (0, res.trajectory.initial_internal)
    work = g.copy()
    assert res.trajectory.initial_internal == _eligible_count(work, side, filtered)
    for step, (u, v) in enumerate(res.trajectory.removed_edges, start=1):
        work.remove_link(u, v)
        assert projection_equal(base, project(work, side))
        full = _eligible_count(work, side, filtered)
        assert pts[step] == (step, full)
        assert full <= res.trajectory.initial_internal - step
    assert pts[-1][1] == 0
    assert work.same_edges(res.pruned_graph)


def test_criterion_05_prune_steps_match_oracles():
    start = time.monotonic()
    rng = random.Random(4242)
    runs = 0
    for k in range(200):
        g = random_bipartite(rng, 2 + k % 6, 2 + (k // 6) % 6, 0.35)
        side = Side.BOTTOM if k % 2 == 0 else Side.TOP
        for seed in range(1, 6):
            policy = "all" if seed % 2 else "filtered"
            res = prune_random(g, side, seed=seed, eligibility=policy)
            _replay_and_check(g, side, policy, res)
            runs += 1
    elapsed = time.monotonic() - start
    assert runs == 1000
    assert elapsed < 300
    print(f"[criterion 5] PASS: {runs} prune runs step-verified in {elapsed:.1f}s")


def test_criterion_06_randomization_preserves_degrees_exactly():
    rng = random.Random(99)
    graphs = 0
    while graphs < 100:
        g = random_bipartite(rng, rng.randint(2, 8), rng.randint(2, 8), 0.35)
        if g.edge_count < 2:
            continue
        graphs += 1
        for seed in range(1, 6):
            res = randomize(g, SwapConfig(seed=seed))
            assert res.graph.degree_sequences() == g.degree_sequences()
            assert res.graph.edge_count == g.edge_count
            assert_graph_valid(res.graph)
    rigid = build([("A", "i"), ("A", "j"), ("B", "i"), ("B", "j")])
    res = randomize(rigid, SwapConfig(swaps_per_edge=50, max_rejections_factor=10))
    assert res.graph.same_edges(rigid)
    assert res.saturated
    print(f"[criterion 6] PASS: {graphs} graphs x 5 seeds exact; rigid graph saturates unchanged")


def test_criterion_07_planted_duplicates_compress():
    rng = random.Random(2026)
    g = BipartiteGraph()
    for i in range(500):
        g.add_bottom(f"b{i}")
    neighborhoods = []
    for j in range(2000):
        t = g.add_top(f"t{j}")
        if neighborhoods and rng.random() < 0.5:
            nbrs = neighborhoods[rng.randrange(len(neighborhoods))]
        else:
            nbrs = sorted(rng.sample(range(500), rng.randint(1, 4)))
        neighborhoods.append(nbrs)
        for u in nbrs:
            g.add_link(u, t)
    res = prune_random(g, Side.BOTTOM, seed=1, eligibility="all")
    assert res.compression_ratio < 1
    before, after = io.StringIO(), io.StringIO()
    write_projection(project(g, Side.BOTTOM), before)
    write_projection(project(res.pruned_graph, Side.BOTTOM), after)
    assert before.getvalue() == after.getvalue()
    print(
        f"[criterion 7] PASS: edge ratio {res.compression_ratio:.3f} "
        f"({res.original_edge_count} -> {res.pruned_edge_count}), "
        f"byte ratio {res.byte_ratio:.3f}"
    )


def test_criterion_08_cli_runs_are_byte_reproducible(tmp_path):
    rng = random.Random(64)
    lines = sorted({(f"b{rng.randrange(10)}", f"t{rng.randrange(10)}") for _ in range(40)})
    inp = tmp_path / "in.tsv"
    inp.write_text("".join(f"{b}\t{t}\n" for b, t in lines), encoding="utf-8")
    commands = {
        "stats": ["stats", "--null-samples", "3"],
        "project": ["project", "--side", "bottom"],
        "nullmodel": ["nullmodel", "--null-samples", "2"],
        "prune": ["prune", "--seed", "5"],
        "distribution": ["distribution", "--filter", "off"],
    }
    for name, args in commands.items():
        outs = []
        for attempt in ("first", "second"):
            prefix = tmp_path / f"{name}-{attempt}"
            rc = cli_main(args + ["--input", str(inp), "--out", str(prefix)])
            assert rc == 0
            files = sorted(tmp_path.glob(f"{name}-{attempt}.*"))
            assert files
            outs.append({f.name.split(".", 1)[1]: f.read_bytes() for f in files})
        assert outs[0] == outs[1]
    rc = cli_main(
        ["nullmodel", "--input", str(inp), "--out", str(tmp_path / "n1"), "--null-samples", "1"]
    )
    assert rc == 0
    rc = cli_main(
        ["nullmodel", "--input", str(inp), "--out", str(tmp_path / "n2"),
         "--null-samples", "1", "--seed", "2"]
    )
    assert rc == 0
    assert (tmp_path / "n1.null1.tsv").read_bytes() != (tmp_path / "n2.null1.tsv").read_bytes()
    print("[criterion 8] PASS: all five commands byte-identical across reruns")


def test_criterion_09_redundancy_fixtures_and_brute_force():
    star = build([("A", "i"), ("B", "i"), ("C", "i")])
    assert redundancy(star, Side.TOP, 0) == 0.0
    cycle = build([("A", "i"), ("A", "j"), ("B", "i"), ("B", "j")])
    for side in Side:
        for idx in range(2):
            assert redundancy(cycle, side, idx) == 1.0
    rng = random.Random(808)
    nodes = 0
    for _ in range(200):
        g = random_bipartite(rng, rng.randint(1, 7), rng.randint(1, 7), 0.4)
        for side in Side:
            for idx in range(g.side_count(side)):
                nodes += 1
                assert redundancy(g, side, idx) == brute_redundancy(g, side, idx)
    print(f"[criterion 9] PASS: fixtures exact, {nodes} node values match brute force")


def test_criterion_10_report_quantities_cross_check():
    rng = random.Random(515)
    series_checked = 0
    for _ in range(120):
        g = random_bipartite(rng, rng.randint(1, 8), rng.randint(1, 8), 0.35)
        for side in Side:
            for filtered in (False, True):
                links = enumerate_internal_links(g, side, apply_degree_filter=filtered)
                analyzed = count_analyzed_links(g, filtered)
                st = node_stats(g, side, apply_degree_filter=filtered)
                via_degrees = sum(s.internal_degree for s in st if s.node.side is side)
                assert via_degrees == len(links)
                rep = compute_report(g, SwapConfig(), 0, filter=filtered, pair_mode="off")
                side_rep = rep.bottom if side is Side.BOTTOM else rep.top
                expected = len(links) / analyzed if analyzed else 0.0
                assert side_rep.f_ei == expected
                assert side_rep.f_ei == (via_degrees / analyzed if analyzed else 0.0)
                try:
                    series = ccdf_internal_fraction(st, side=side)
                except EmptyPopulationError:
                    continue
                series_checked += 1
                ps = [p for _, p in series.points]
                assert all(a >= b for a, b in zip(ps, ps[1:]))
    assert series_checked > 0
    print(f"[criterion 10] PASS: counts agree both ways; {series_checked} series monotone")
