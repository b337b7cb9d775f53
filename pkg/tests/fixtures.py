"""Hand-built graphs exercising specific branches of the construction."""
from itertools import combinations

from rvcolor.graph import Graph


def absorption_fixture() -> Graph:
    """delta = 6; the distance-2 vertex c has exactly 5 = floor(2*6/3) + 1
    neighbors at distance 2 from S' = {0}, so Procedure 2 runs once.

    ids: 0, a1..a6 = 1..6 (a clique with 0), c = 7, p1..p5 = 8..12.
    """
    edges = list(combinations(range(7), 2))
    c = 7
    edges.append((6, c))
    for p in range(8, 13):
        edges.append((c, p))
        edges.extend((a, p) for a in range(1, 6))
    return Graph.from_edges(13, edges)


HUB = 1


def hub_fixture() -> Graph:
    """delta = 6; vertex 1 is adjacent to all 49 distance-2 vertices.

    ids: 0, hub = 1, a1..a6 = 2..7 (a K8 together), then 49 vertices
    8..56 forming the circulant C49(1, 2); vertex 8 + i is also joined to
    the hub and to a_{i mod 6}.
    """
    edges = list(combinations(range(8), 2))
    ring = 49
    for i in range(ring):
        v = 8 + i
        for step in (1, 2):
            w = 8 + (i + step) % ring
            edges.append((min(v, w), max(v, w)))
        edges.append((HUB, v))
        edges.append((2 + i % 6, v))
    return Graph.from_edges(8 + ring, edges)
