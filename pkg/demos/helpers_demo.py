"""Small generator shared by the demo scripts."""

from bipartite_internal import BipartiteGraph


def planted_duplicates(rng, bottoms, tops, dup_prob=0.5, max_fresh=4):
    """Two-mode graph where each top copies an earlier top's neighborhood
    with probability dup_prob, otherwise draws a fresh random one."""
    g = BipartiteGraph()
    for i in range(bottoms):
        g.add_bottom(f"b{i}")
    seen = []
    for j in range(tops):
        t = g.add_top(f"t{j}")
        if seen and rng.random() < dup_prob:
            nbrs = seen[rng.randrange(len(seen))]
        else:
            nbrs = sorted(rng.sample(range(bottoms), rng.randint(1, max_fresh)))
        seen.append(nbrs)
        for u in nbrs:
            g.add_link(u, t)
    return g
