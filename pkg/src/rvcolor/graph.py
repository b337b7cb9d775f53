"""Simple undirected graphs on vertex ids ``0..n-1`` and BFS primitives.

Every routine that has to make a choice breaks ties by the lowest vertex id,
so results never depend on set iteration order.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DisconnectedGraphError, InvalidArgumentError


class Graph:
    """Immutable simple undirected graph.

    ``adj[v]`` is a frozenset of neighbors, ``neighbors(v)`` the same ids in
    ascending order.
    """

    __slots__ = ("n", "m", "adj", "_sorted")

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]):
        if n < 0 or len(adjacency) != n:
            raise InvalidArgumentError("adjacency must have exactly n entries")
        adj = tuple(frozenset(nbrs) for nbrs in adjacency)
        total = 0
        for v, nbrs in enumerate(adj):
            if v in nbrs:
                raise InvalidArgumentError(f"self-loop at vertex {v}")
            for w in nbrs:
                if not 0 <= w < n:
                    raise InvalidArgumentError(f"neighbor {w} of {v} out of range")
                if v not in adj[w]:
                    raise InvalidArgumentError(f"adjacency not symmetric at ({v}, {w})")
            total += len(nbrs)
        self.n = n
        self.m = total // 2
        self.adj = adj
        self._sorted = tuple(tuple(sorted(nbrs)) for nbrs in adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph; rejects self-loops, duplicates and out-of-range ids."""
        adjacency: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgumentError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidArgumentError(f"self-loop at vertex {u}")
            if v in adjacency[u]:
                raise InvalidArgumentError(f"duplicate edge ({u}, {v})")
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(n, adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._sorted[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self._sorted[u] if u < v]

    def vertices(self) -> range:
        return range(self.n)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def induced(self, vertices: Iterable[int]) -> dict[int, tuple[int, ...]]:
        """Sorted adjacency of the subgraph induced by ``vertices``."""
        keep = set(vertices)
        return {v: tuple(w for w in self._sorted[v] if w in keep) for v in sorted(keep)}

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        adjacency = [set(nbrs) for nbrs in self.adj]
        for u, v in removed:
            adjacency[u].discard(v)
            adjacency[v].discard(u)
        return Graph(self.n, adjacency)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class LayerDecomposition:
    """BFS layers around a source set: ``layers[k]`` holds the vertices at distance k."""

    source: frozenset[int]
    layers: tuple[frozenset[int], ...]
    index: tuple[int, ...]  # -1 for unreachable vertices

    def layer(self, k: int) -> frozenset[int]:
        if 0 <= k < len(self.layers):
            return self.layers[k]
        return frozenset()

    @property
    def depth(self) -> int:
        """Index of the deepest non-empty layer."""
        return len(self.layers) - 1

    def sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]


def _check_vertices(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    s = frozenset(vertices)
    if not s:
        raise InvalidArgumentError("source set must be non-empty")
    for v in s:
        if not 0 <= v < g.n:
            raise InvalidArgumentError(f"vertex {v} out of range for n={g.n}")
    return s


def bfs_distances(g: Graph, sources: Iterable[int]) -> list[int]:
    """Multi-source BFS distances; ``-1`` marks unreachable vertices."""
    dist = [-1] * g.n
    queue = deque()
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            queue.append(s)
    adj = g.adj
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = d
                queue.append(w)
    return dist


def distance_layers(g: Graph, s: Iterable[int]) -> LayerDecomposition:
    source = _check_vertices(g, s)
    dist = bfs_distances(g, source)
    depth = max(dist)
    buckets: list[set[int]] = [set() for _ in range(depth + 1)]
    for v, d in enumerate(dist):
        if d >= 0:
            buckets[d].add(v)
    return LayerDecomposition(
        source=source,
        layers=tuple(frozenset(b) for b in buckets),
        index=tuple(dist),
    )


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return min(bfs_distances(g, [0])) >= 0


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(f"graph with n={g.n} is not connected")


def min_degree(g: Graph) -> int:
    return min((len(a) for a in g.adj), default=0)


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adj), default=0)


def eccentricity(g: Graph, v: int) -> int:
    dist = bfs_distances(g, [v])
    if min(dist) < 0:
        raise DisconnectedGraphError("graph is not connected")
    return max(dist)


def diameter(g: Graph) -> int:
    """Largest BFS distance over all vertex pairs."""
    require_connected(g)
    return max((eccentricity(g, v) for v in g.vertices()), default=0)


def descend(g: Graph, dist: Sequence[int], v: int) -> list[int]:
    """Walk from ``v`` down a distance labelling to a distance-0 vertex.

    Each step moves to the lowest-id neighbor one step closer.
    """
    path = [v]
    cur = v
    while dist[cur] > 0:
        target = dist[cur] - 1
        for w in g.neighbors(cur):
            if dist[w] == target:
                cur = w
                break
        else:
            raise InvalidArgumentError("distance labelling is not a BFS labelling")
        path.append(cur)
    return path


def shortest_path_to_set(g: Graph, v: int, t: Iterable[int]) -> list[int]:
    """Shortest path ``v, ..., x0`` with ``x0`` in ``t`` and no interior vertex in ``t``."""
    target = _check_vertices(g, t)
    if not 0 <= v < g.n:
        raise InvalidArgumentError(f"vertex {v} out of range for n={g.n}")
    if v in target:
        raise InvalidArgumentError(f"vertex {v} already belongs to the target set")
    dist = bfs_distances(g, target)
    if dist[v] < 0:
        raise DisconnectedGraphError(f"vertex {v} cannot reach the target set")
    return descend(g, dist, v)


def induced_is_connected(g: Graph, s: Iterable[int]) -> bool:
    sub = g.induced(s)
    if not sub:
        return False
    start = next(iter(sub))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in sub[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(sub)
