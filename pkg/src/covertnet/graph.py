"""Immutable graph representation and geodesic distance metrics.

The graph model is deliberately small: a fixed vertex set labeled 0..n-1,
optional direction, and nonnegative edge weights. Everything downstream
(secrecy measures, structure search, detection simulation) reads from this
representation and never mutates it.

Distances come in two flavours controlled by ``hop_mode``: unit hops (every
edge counts 1, the default) or the stored edge weights. Unreachable pairs
are marked with ``UNREACHABLE`` (infinity) rather than a large finite
number, so a disconnected pair can never silently corrupt a distance sum.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

#: Marker stored in a DistanceMatrix for pairs with no connecting path.
UNREACHABLE = math.inf


class GraphError(ValueError):
    """Invalid graph construction or an operation on an unsuitable graph."""


class DisconnectedGraphError(GraphError):
    """Raised when a metric is undefined because the graph is disconnected."""


EdgeInput = Sequence  # (source, target) or (source, target, weight)


def _is_int(x) -> bool:
    """True integers only; bool is an int subtype and must not pass."""
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1.

    Edges are stored canonically: deduplicated, sorted, and (when
    undirected) with source < target. Use :func:`build_graph` instead of
    constructing directly; the factory validates and canonicalizes raw
    edge lists.
    """

    n: int
    directed: bool
    edges: tuple[tuple[int, int, float], ...]

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def _out_adj(self) -> tuple[tuple[tuple[int, float], ...], ...]:
        """Per-vertex outgoing (neighbor, weight) lists; both ways if undirected."""
        adj: list[list[tuple[int, float]]] = [[] for _ in range(self.n)]
        for s, t, w in self.edges:
            adj[s].append((t, w))
            if not self.directed:
                adj[t].append((s, w))
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def _in_adj(self) -> tuple[tuple[tuple[int, float], ...], ...]:
        adj: list[list[tuple[int, float]]] = [[] for _ in range(self.n)]
        for s, t, w in self.edges:
            adj[t].append((s, w))
            if not self.directed:
                adj[s].append((t, w))
        return tuple(tuple(sorted(a)) for a in adj)

    def out_neighbors(self, i: int) -> tuple[int, ...]:
        """Vertices reachable from i along one edge (all neighbors if undirected)."""
        self._check_vertex(i)
        return tuple(t for t, _ in self._out_adj[i])

    def in_neighbors(self, i: int) -> tuple[int, ...]:
        """Vertices with an edge pointing at i (all neighbors if undirected)."""
        self._check_vertex(i)
        return tuple(s for s, _ in self._in_adj[i])

    def degree_sequence(self) -> tuple[int, ...]:
        """Undirected degrees d_0..d_{n-1}.

        Only defined for undirected graphs; the secrecy measures are stated
        in terms of plain degrees.
        """
        if self.directed:
            raise GraphError("degree_sequence is defined for undirected graphs")
        return tuple(len(a) for a in self._out_adj)

    def _check_vertex(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise GraphError(f"vertex {i} out of range for graph on {self.n} vertices")


def build_graph(
    n: int,
    directed: bool = False,
    edges: Iterable[EdgeInput] = (),
) -> Graph:
    """Validate and canonicalize an edge list into an immutable Graph.

    Parameters
    ----------
    n : vertex count, at least 1; vertices are labeled 0..n-1.
    directed : whether edges are ordered pairs.
    edges : iterable of (source, target) or (source, target, weight) with
        weight a nonnegative real (default 1.0).

    Raises
    ------
    GraphError
        On an endpoint out of range, a self-loop, a duplicate edge, or a
        negative weight; the offending edge is named in the message.
    """
    if not _is_int(n) or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    canon: dict[tuple[int, int], float] = {}
    for raw in edges:
        item = tuple(raw)
        if len(item) == 2:
            s, t = item
            w = 1.0
        elif len(item) == 3:
            s, t, w = item
        else:
            raise GraphError(f"edge {raw!r} must be (source, target[, weight])")
        if not (_is_int(s) and _is_int(t)):
            raise GraphError(f"edge {raw!r} has non-integer endpoints")
        if not (0 <= s < n and 0 <= t < n):
            raise GraphError(f"edge {raw!r} has an endpoint out of range [0, {n})")
        if s == t:
            raise GraphError(f"edge {raw!r} is a self-loop")
        w = float(w)
        if math.isnan(w) or w < 0:
            raise GraphError(f"edge {raw!r} has a negative weight")
        key = (s, t) if directed else (min(s, t), max(s, t))
        if key in canon:
            raise GraphError(f"duplicate edge {raw!r}")
        canon[key] = w
    edge_tuple = tuple((s, t, canon[(s, t)]) for s, t in sorted(canon))
    return Graph(n=n, directed=directed, edges=edge_tuple)


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs geodesic distances.

    ``dist`` is an n-by-n float array with ``dist[i][j]`` the length of the
    shortest path from i to j, 0 on the diagonal, and ``UNREACHABLE`` where
    no path exists. ``hop_mode`` records whether unit hops or stored edge
    weights were used. The array is frozen (non-writeable).
    """

    n: int
    dist: np.ndarray
    hop_mode: bool

    def __post_init__(self) -> None:
        self.dist.setflags(write=False)

    def reachable(self, i: int, j: int) -> bool:
        return bool(self.dist[i, j] != UNREACHABLE)

    def all_reachable(self) -> bool:
        return bool(np.all(self.dist != UNREACHABLE))


def _hop_distances_from(g: Graph, source: int, out: np.ndarray) -> None:
    """Breadth-first unit-hop distances from one source, written into ``out``."""
    out[source] = 0.0
    queue = deque([source])
    adj = g._out_adj
    while queue:
        u = queue.popleft()
        du = out[u]
        for v, _ in adj[u]:
            if out[v] == UNREACHABLE:
                out[v] = du + 1.0
                queue.append(v)


def _weighted_distances_from(g: Graph, source: int, out: np.ndarray) -> None:
    """Dijkstra distances from one source using stored weights."""
    out[source] = 0.0
    done = [False] * g.n
    heap: list[tuple[float, int]] = [(0.0, source)]
    adj = g._out_adj
    while heap:
        du, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in adj[u]:
            dv = du + w
            if dv < out[v]:
                out[v] = dv
                heapq.heappush(heap, (dv, v))


def geodesic_distances(g: Graph, hop_mode: bool = True) -> DistanceMatrix:
    """All-pairs shortest distances of ``g``.

    With ``hop_mode`` every edge counts one step; otherwise path length is
    the sum of stored edge weights. Entries for unreachable pairs are
    ``UNREACHABLE``; the matrix is asymmetric only when ``g`` is directed.
    """
    dist = np.full((g.n, g.n), UNREACHABLE, dtype=float)
    for source in range(g.n):
        if hop_mode:
            _hop_distances_from(g, source, dist[source])
        else:
            _weighted_distances_from(g, source, dist[source])
    return DistanceMatrix(n=g.n, dist=dist, hop_mode=hop_mode)


def is_connected(g: Graph) -> bool:
    """True iff every ordered vertex pair is reachable.

    For directed graphs this is strong connectivity: vertex 0 must reach
    everything along out-edges and be reached by everything (checked via
    in-edges).
    """
    if g.n == 1:
        return True
    if not _reaches_all(g, forward=True):
        return False
    if g.directed:
        return _reaches_all(g, forward=False)
    return True


def _reaches_all(g: Graph, forward: bool) -> bool:
    adj = g._out_adj if forward else g._in_adj
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v, _ in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n


def total_distance(g: Graph, hop_mode: bool = True) -> float:
    """Sum of geodesic distances over all ordered vertex pairs.

    Diagonal pairs contribute 0, and each unordered pair of an undirected
    graph is counted in both directions.

    Raises
    ------
    DisconnectedGraphError
        If any pair is unreachable; the sum would be infinite.
    """
    dm = geodesic_distances(g, hop_mode=hop_mode)
    if not dm.all_reachable():
        raise DisconnectedGraphError(
            "total distance is undefined for a disconnected graph"
        )
    return float(dm.dist.sum())


def diameter(g: Graph, hop_mode: bool = True) -> float:
    """Maximum geodesic distance over all ordered vertex pairs."""
    dm = geodesic_distances(g, hop_mode=hop_mode)
    if not dm.all_reachable():
        raise DisconnectedGraphError("diameter is undefined for a disconnected graph")
    return float(dm.dist.max())


def community(g: Graph, i: int, delta: float, hop_mode: bool = True) -> set[int]:
    """Vertices at geodesic distance exactly ``delta`` from vertex ``i``.

    Exact equality is intentional: the distance-0 community is {i} itself,
    and unreachable vertices belong to no community. Returns the empty set
    when nothing lies at exactly ``delta``.
    """
    g._check_vertex(i)
    if math.isnan(delta) or delta < 0:
        raise GraphError(f"community distance must be nonnegative, got {delta!r}")
    dm = geodesic_distances(g, hop_mode=hop_mode)
    row = dm.dist[i]
    return {j for j in range(g.n) if row[j] == delta}
