"""Explicit rainbow paths routed through a connected 2-step dominating set.

For a dominating set S with layers N1, N2 the path between u and v is

    u [x_u] [anchor] --(shortest path inside S)-- [anchor] [x_v] v

where anchors are S-neighbors and ``x_u``/``x_v`` are N1-neighbors of
N2 endpoints. Hubs (the D1 part of N1) carry exclusive colors and are
preferred as ``x``; otherwise the two ``x`` are picked with different colors.
"""
from __future__ import annotations

from collections import deque
from typing import Sequence

from .errors import CertificateError
from .graph import Graph, distance_layers


class CertificateBuilder:
    def __init__(self, g: Graph, s: Sequence[int], colors: Sequence[int], hubs=frozenset()):
        self.g = g
        self.colors = colors
        self.s = frozenset(s)
        self.layers = distance_layers(g, self.s)
        self.dist = self.layers.index
        if min(self.dist) < 0 or self.layers.depth > 2:
            raise CertificateError(None, "S is not 2-step dominating")
        self.hubs = frozenset(hubs)
        dist = self.dist
        self.anchor = {}
        for v in self.layers.layer(1):
            self.anchor[v] = next(w for w in g.neighbors(v) if dist[w] == 0)
        self.inner = {}
        self.hub_of = {}
        for v in self.layers.layer(2):
            near = [w for w in g.neighbors(v) if dist[w] == 1]
            hub = next((w for w in near if w in self.hubs), None)
            if hub is not None:
                self.hub_of[v] = hub
            self.inner[v] = near
        self._s_adj = g.induced(self.s)
        self._s_dist: dict[int, dict[int, int]] = {}
        self._s_paths: dict[tuple[int, int], tuple[int, ...]] = {}

    def s_path(self, a: int, b: int) -> tuple[int, ...]:
        """Shortest a-b path inside S, lowest-id steps walking back from b."""
        key = (a, b)
        cached = self._s_paths.get(key)
        if cached is not None:
            return cached
        dist = self._s_dist.get(a)
        if dist is None:
            dist = {a: 0}
            queue = deque([a])
            while queue:
                x = queue.popleft()
                for w in self._s_adj[x]:
                    if w not in dist:
                        dist[w] = dist[x] + 1
                        queue.append(w)
            self._s_dist[a] = dist
        if b not in dist:
            raise CertificateError((a, b), "S does not induce a connected subgraph")
        walk = [b]
        cur = b
        while cur != a:
            cur = next(w for w in self._s_adj[cur] if dist.get(w) == dist[cur] - 1)
            walk.append(cur)
        walk.reverse()
        path = tuple(walk)
        self._s_paths[key] = path
        return path

    def _default_x(self, v: int) -> int:
        hub = self.hub_of.get(v)
        return hub if hub is not None else self.inner[v][0]

    def _walk(self, v: int, x: int | None) -> list[int]:
        d = self.dist[v]
        if d == 0:
            return [v]
        if d == 1:
            return [v, self.anchor[v]]
        return [v, x, self.anchor[x]]

    def endpoints(self, u: int, v: int):
        """Either ``(direct_path, None, None)`` or the two walks into S."""
        g = self.g
        if v in g.adj[u]:
            return [u, v], None, None
        du, dv = self.dist[u], self.dist[v]
        xu = xv = None
        if du == 2 or dv == 2:
            # One internal vertex is always rainbow.
            common = g.adj[u] & g.adj[v]
            if common:
                return [u, min(common), v], None, None
        if du == 2 and dv == 2:
            xu = self._default_x(u)
            if v in self.hub_of:
                xv = self.hub_of[v]
            elif u in self.hub_of:
                xv = self.inner[v][0]
            else:
                cu = self.colors[xu]
                xv = next((w for w in self.inner[v] if self.colors[w] != cu), None)
                if xv is None:
                    raise CertificateError((u, v), f"N1-neighbors of {v} all share the color of {xu}")
        elif du == 2:
            xu = self._default_x(u)
        elif dv == 2:
            xv = self._default_x(v)
        return None, self._walk(u, xu), self._walk(v, xv)

    def path(self, u: int, v: int) -> list[int]:
        direct, walk_u, walk_v = self.endpoints(u, v)
        if direct is not None:
            return direct
        middle = self.s_path(walk_u[-1], walk_v[-1])
        return walk_u[:-1] + list(middle) + walk_v[-2::-1]


def build_certificate_path(g: Graph, s, coloring, u: int, v: int, hubs=frozenset()) -> list[int]:
    colors = getattr(coloring, "colors", coloring)
    return CertificateBuilder(g, s, colors, hubs).path(u, v)
