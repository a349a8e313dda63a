"""Shared test utilities: tiny graph builders plus brute-force oracles
written straight from the definitions (python sets, full projections),
independent of the adjacency-list code under test."""

from bipartite_internal import BipartiteGraph, Side


def build(edges, bottoms=(), tops=()):
    """Graph from (bottom_label, top_label) pairs plus extra isolated nodes."""
    g = BipartiteGraph()
    for b in bottoms:
        g.bottom_id(b)
    for t in tops:
        g.top_id(t)
    for b, t in edges:
        g.add_link(g.bottom_id(b), g.top_id(t))
    return g


def random_bipartite(rng, nb, nt, p):
    g = BipartiteGraph()
    for i in range(nb):
        g.add_bottom(f"b{i}")
    for j in range(nt):
        g.add_top(f"t{j}")
    for i in range(nb):
        for j in range(nt):
            if rng.random() < p:
                g.add_link(i, j)
    return g


def brute_projection(g, side):
    """Projection edge set straight from the definition, as index pairs."""
    adj = g.adj(side)
    n = len(adj)
    out = set()
    for a in range(n):
        sa = set(adj[a])
        for b in range(a + 1, n):
            if sa.intersection(adj[b]):
                out.add((a, b))
    return out


def brute_internal_link(g, u, v, side):
    h = g.copy()
    h.remove_link(u, v)
    return brute_projection(h, side) == brute_projection(g, side)


def brute_internal_pair(g, u, v, side):
    h = g.copy()
    h.add_link(u, v)
    return brute_projection(h, side) == brute_projection(g, side)


def brute_redundancy(g, side, idx):
    """Redundancy by actually deleting the node's links and projecting."""
    nbrs = list(g.adj(side)[idx])
    d = len(nbrs)
    if d < 2:
        return None
    h = g.copy()
    for w in nbrs:
        if side is Side.BOTTOM:
            h.remove_link(idx, w)
        else:
            h.remove_link(w, idx)
    proj = brute_projection(h, side.opposite())
    hits = sum(
        1
        for i in range(d)
        for j in range(i + 1, d)
        if (min(nbrs[i], nbrs[j]), max(nbrs[i], nbrs[j])) in proj
    )
    return hits / (d * (d - 1) // 2)


def assert_graph_valid(g):
    """Structural invariants: sorted unique adjacency, mirror symmetry,
    consistent edge count."""
    for adj in (g.bottom_adj, g.top_adj):
        for nbrs in adj:
            assert nbrs == sorted(nbrs)
            assert len(nbrs) == len(set(nbrs))
    assert sum(len(x) for x in g.bottom_adj) == g.edge_count
    assert sum(len(x) for x in g.top_adj) == g.edge_count
    for u, nbrs in enumerate(g.bottom_adj):
        for v in nbrs:
            assert u in g.top_adj[v]
