"""Spanning trees with many leaves, and the colorings they induce.

Coloring the internal vertices of a spanning tree injectively makes every
tree path rainbow, so a tree with L leaves certifies rvc(G) <= n - L.
"""
from __future__ import annotations

import heapq
from collections import deque

from .errors import InvalidArgumentError
from .graph import Graph, require_connected
from .resample import as_rng

EXTRA_ROOTS = 3


def tree_leaves(t: Graph) -> list[int]:
    return [v for v in t.vertices() if t.degree(v) == 1]


def _grow(g: Graph, root: int) -> Graph:
    """Greedy leafy tree: expand the leaf adding the most net leaves.

    A leaf with a single outside neighbor y may expand two steps at once
    (x-y, then all of y's outside neighbors).
    """
    n = g.n
    in_tree = [False] * n
    expanded = [False] * n
    edges: list[tuple[int, int]] = []
    heap: list[tuple[int, int]] = []

    def outside(x: int) -> list[int]:
        return [w for w in g.neighbors(x) if not in_tree[w]]

    def gain(x: int) -> int | None:
        out = outside(x)
        if not out:
            return None
        if len(out) >= 2:
            return len(out) - 1
        return max(0, len(outside(out[0])) - 1)

    def attach(x: int, new: list[int]) -> None:
        expanded[x] = True
        for z in new:
            in_tree[z] = True
            edges.append((x, z))
        for z in new:
            heapq.heappush(heap, (-(gain(z) or 0), z))
            for w in g.neighbors(z):
                if in_tree[w] and not expanded[w]:
                    key = gain(w)
                    if key is not None:
                        heapq.heappush(heap, (-key, w))

    in_tree[root] = True
    attach(root, outside(root))
    placed = 1 + len(edges)
    while placed < n:
        key, x = heapq.heappop(heap)
        if expanded[x]:
            continue
        current = gain(x)
        if current is None:
            continue
        if current != -key:
            heapq.heappush(heap, (-current, x))
            continue
        out = outside(x)
        if len(out) == 1 and len(outside(out[0])) >= 2:
            y = out[0]
            attach(x, [y])
            attach(y, outside(y))
        else:
            attach(x, out)
        placed = 1 + len(edges)
    return Graph.from_edges(n, edges)


def max_leaf_spanning_tree(g: Graph, seed=None) -> Graph:
    """Best greedy tree over a few roots.

    Tries the lowest-id maximum-degree vertex plus up to three seeded random
    roots and keeps the tree with most leaves (earliest root on ties).
    """
    require_connected(g)
    if g.n <= 1:
        return Graph(g.n, [set() for _ in range(g.n)])
    top = max(g.degree(v) for v in g.vertices())
    roots = [min(v for v in g.vertices() if g.degree(v) == top)]
    others = [v for v in g.vertices() if v != roots[0]]
    roots += as_rng(seed).sample(others, min(EXTRA_ROOTS, len(others)))
    best = None
    for root in roots:
        t = _grow(g, root)
        if best is None or len(tree_leaves(t)) > len(tree_leaves(best)):
            best = t
    return best


def bfs_tree(g: Graph, root: int) -> Graph:
    require_connected(g)
    seen = [False] * g.n
    seen[root] = True
    queue = deque([root])
    edges = []
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if not seen[w]:
                seen[w] = True
                edges.append((v, w))
                queue.append(w)
    return Graph.from_edges(g.n, edges)


def max_degree_tree(g: Graph) -> Graph:
    """BFS tree from the lowest-id maximum-degree vertex; keeps all its edges."""
    top = max(g.degree(v) for v in g.vertices())
    return bfs_tree(g, min(v for v in g.vertices() if g.degree(v) == top))


def tree_coloring(t: Graph) -> list[int]:
    """Internal vertices get colors 0, 1, ... in id order; leaves reuse color 0."""
    if t.m != t.n - 1:
        raise InvalidArgumentError("not a spanning tree")
    colors = [0] * t.n
    nxt = 0
    for v in t.vertices():
        if t.degree(v) >= 2:
            colors[v] = nxt
            nxt += 1
    return colors
