"""Per-node views: internal fraction, redundancy, and their distribution.

The internal fraction of a node (share of its links that are internal)
and its redundancy coefficient (share of its neighbor pairs that stay
connected without it) sound alike but measure different things. The hub
graph below orders two nodes oppositely under the two measures. The
script then prints a CCDF of internal fractions for a larger random
graph, the plot-ready series the distribution command writes.
"""

import random

from bipartite_internal import (
    BipartiteGraph,
    Side,
    ccdf_internal_fraction,
    degree_vs_internal_degree,
    node_stats,
)
from helpers_demo import planted_duplicates

hub = BipartiteGraph()
for b, t in [("A", "i"), ("B", "i"), ("C", "i"), ("D", "i"),
             ("A", "j"), ("B", "j"), ("A", "k"), ("C", "k"), ("A", "l"), ("D", "l")]:
    hub.add_link(hub.bottom_id(b), hub.top_id(t))

print("node  degree  internal_deg  fraction  redundancy")
for s in node_stats(hub, Side.BOTTOM, apply_degree_filter=False):
    if s.node.side is not Side.BOTTOM:
        continue
    frac = "-" if s.internal_fraction is None else f"{s.internal_fraction:.2f}"
    red = "-" if s.redundancy is None else f"{s.redundancy:.2f}"
    label = hub.bottom_labels[s.node.index]
    print(f"{label:4}  {s.degree:6}  {s.internal_degree:12}  {frac:>8}  {red:>10}")
print()
print("A keeps every link internal yet only half its neighbor pairs survive")
print("without it; B is the mirror image.")
print()

rng = random.Random(3)
g = planted_duplicates(rng, bottoms=25, tops=150, dup_prob=0.4)
stats = node_stats(g, Side.BOTTOM, apply_degree_filter=True)
series = ccdf_internal_fraction(stats, side=Side.BOTTOM)
print(f"CCDF of internal fraction over {series.population}:")
for x, p in series.points:
    print(f"  P(f >= {x:.3f}) = {p:.3f}")
print()

bottoms_only = [s for s in stats if s.node.side is Side.BOTTOM]
corr = degree_vs_internal_degree(bottoms_only)
print("internal degree vs mean node degree:")
for k, mean_deg, n in corr.points:
    print(f"  internal degree {k}: mean degree {mean_deg:.2f} over {n} nodes")
