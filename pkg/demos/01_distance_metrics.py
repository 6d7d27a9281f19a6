"""Distance metrics on small graphs.

Walks through the graph core: building an immutable graph, reading the
all-pairs geodesic distance matrix, and the three summary metrics derived
from it (total distance, diameter, distance rings around a vertex).
"""

import numpy as np

from covertnet import (
    UNREACHABLE,
    build_graph,
    community,
    diameter,
    geodesic_distances,
    is_connected,
    total_distance,
)

# A six-member cell: a tight triangle {0,1,2} with a chain hanging off it.
g = build_graph(6, edges=[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5)])
print("vertices:", g.n, " edges:", g.m, " connected:", is_connected(g))

# The distance matrix counts hops by default.
dm = geodesic_distances(g)
print("\ngeodesic distances (hops):")
print(dm.dist.astype(int))

# Total distance sums every ordered pair; the diameter is the worst pair.
print("\ntotal distance T :", total_distance(g))
print("diameter D       :", diameter(g))

# Communities are exact-distance rings around a vertex. Around vertex 2
# they peel off the triangle first, then the chain.
for delta in range(int(diameter(g)) + 1):
    print(f"at distance {delta} from vertex 2:", sorted(community(g, 2, delta)))

# Edge weights are opt-in: hop_mode=False switches to weighted geodesics.
weighted = build_graph(4, edges=[(0, 1, 0.5), (1, 2, 0.5), (0, 2, 2.0), (2, 3, 1.0)])
wd = geodesic_distances(weighted, hop_mode=False)
print("\nweighted distance 0->2:", wd.dist[0, 2], "(the two-step route beats the direct tie)")

# Disconnected pairs carry an explicit marker instead of a large number,
# so nothing downstream can silently absorb them.
broken = build_graph(4, edges=[(0, 1)])
print("\nunreachable pair marker:", geodesic_distances(broken).dist[0, 3], "==", UNREACHABLE)
print("is_connected:", is_connected(broken))
try:
    total_distance(broken)
except Exception as err:
    print("total_distance refuses:", err)
