"""Shrink a two-mode graph without touching its one-mode projection.

Random pruning removes internal links one at a time, re-checking only
the links whose status can have changed. The projection is provably
identical afterwards; the edge list, and the file it serializes to,
get smaller. Duplicated neighborhoods compress well.
"""

import io
import random

from bipartite_internal import Side, project, projection_equal, prune_random, write_projection
from helpers_demo import planted_duplicates

rng = random.Random(21)
g = planted_duplicates(rng, bottoms=50, tops=400, dup_prob=0.5)
print(f"before: {g.edge_count} edges")

result = prune_random(g, Side.BOTTOM, seed=1, eligibility="all")
print(f"after:  {result.pruned_edge_count} edges")
print(f"edge ratio {result.compression_ratio:.3f}, byte ratio {result.byte_ratio:.3f}")
print()

traj = result.trajectory
print("trajectory (removals -> internal links left):")
for x, y in traj.points[:3]:
    print(f"  {x:4d} -> {y}")
print("   ...")
for x, y in traj.points[-2:]:
    print(f"  {x:4d} -> {y}")
print()

same = projection_equal(project(g, Side.BOTTOM), project(result.pruned_graph, Side.BOTTOM))
print(f"bottom projections identical: {same}")

buf_a, buf_b = io.StringIO(), io.StringIO()
write_projection(project(g, Side.BOTTOM), buf_a)
write_projection(project(result.pruned_graph, Side.BOTTOM), buf_b)
print(f"serialized projections byte-identical: {buf_a.getvalue() == buf_b.getvalue()}")
