"""Which links of a small two-mode graph are internal?

Builds a ten-edge example by hand: top node i is connected to all four
bottoms A..D, and each of B, C, D also shares one private top with A.
Every link touching i can be removed without changing the bottom
projection (the private tops keep each pair connected), but as soon as
one of them is gone the others become load-bearing.
"""

from bipartite_internal import (
    BipartiteGraph,
    Side,
    enumerate_internal_links,
    is_internal_link,
    is_internal_pair,
    project,
)

g = BipartiteGraph()
edges = [
    ("A", "i"), ("B", "i"), ("C", "i"), ("D", "i"),
    ("A", "j"), ("B", "j"),
    ("A", "k"), ("C", "k"),
    ("A", "l"), ("D", "l"),
]
for b, t in edges:
    g.add_link(g.bottom_id(b), g.top_id(t))

proj = project(g, Side.BOTTOM)
print(f"graph: {g.bottom_count} bottoms, {g.top_count} tops, {g.edge_count} edges")
print(f"bottom projection has {proj.edge_count} links (complete graph on 4 nodes)")
print()

print("link        bottom-internal?")
for u, v in g.edges():
    flag = is_internal_link(g, u, v, Side.BOTTOM)
    print(f"({g.bottom_labels[u]}, {g.top_labels[v]})      {flag}")

internal = enumerate_internal_links(g, Side.BOTTOM, apply_degree_filter=False)
print()
print(f"{len(internal)} of {g.edge_count} links are bottom-internal")
print()

# now remove one of them and watch the rest flip
g.remove_link(g.bottom_id("A"), g.top_id("i"))
print("after removing (A, i):")
for b, t in [("B", "j"), ("C", "k"), ("D", "l")]:
    u, v = g.bottom_id(b), g.top_id(t)
    print(f"  ({b}, {t}) bottom-internal? {is_internal_link(g, u, v, Side.BOTTOM)}")
print("the projection is unchanged, but no further link besides those at i is free")
print()

# internal pairs are the mirror image: additions that change nothing
u, v = g.bottom_id("A"), g.top_id("i")
print(f"adding (A, i) back would be projection-neutral: "
      f"{is_internal_pair(g, u, v, Side.BOTTOM)}")
