"""Connected strong 2-step dominating sets.

A set S is 2-step dominating when every vertex lies within distance 2 of it,
and k-strong when each vertex at distance exactly 2 has at least k neighbors
at distance 1. :func:`build_strong_dominator` grows such a set with k =
ceil(delta/3) and size at most 3n/(delta+1) - 2.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import ceil_third, dominator_size_bound
from .errors import ContractError, InvalidArgumentError
from .graph import (
    Graph,
    LayerDecomposition,
    bfs_distances,
    descend,
    distance_layers,
    induced_is_connected,
    min_degree,
    require_connected,
)


@dataclass(frozen=True)
class DominatorReport:
    s: tuple[int, ...]
    k1: int
    k2: int
    layers: LayerDecomposition
    size_bound: float
    strongness: int
    delta: int
    start: int
    # |S' u N1(S')| before the first and after every Procedure-1 iteration
    closed_trace: tuple[int, ...] = field(default=())
    # |N2(S)| before the first and after every Procedure-2 iteration
    fringe_trace: tuple[int, ...] = field(default=())

    @property
    def size(self) -> int:
        return len(self.s)

    @property
    def within_bound(self) -> bool:
        return len(self.s) <= self.size_bound


@dataclass(frozen=True)
class Violation:
    clause: str
    vertex: int | None = None

    def __str__(self) -> str:
        return self.clause if self.vertex is None else f"{self.clause} at vertex {self.vertex}"


def _procedure1(g: Graph, start: int) -> tuple[list[int], int, list[int]]:
    s = [start]
    trace = []
    k1 = 0
    while True:
        dist = bfs_distances(g, s)
        trace.append(sum(1 for d in dist if 0 <= d <= 1))
        far = [v for v, d in enumerate(dist) if d == 3]
        if not far:
            if min(dist) < 0:
                raise ContractError("graph is not connected")
            return s, k1, trace
        v = far[0]
        _, x2, x1, _ = descend(g, dist, v)
        s.extend((v, x1, x2))
        k1 += 1


def procedure1(g: Graph, start: int = 0) -> tuple[list[int], int]:
    """Grow S' from ``start`` until nothing is at distance 3.

    Each round takes the lowest-id vertex v at distance 3 and adds v, x1, x2
    from the shortest path v x2 x1 x0 back to S'.
    """
    require_connected(g)
    if not 0 <= start < g.n:
        raise InvalidArgumentError(f"start vertex {start} out of range")
    s, k1, _ = _procedure1(g, start)
    return s, k1


def _procedure2(g: Graph, s_prime: list[int], delta: int) -> tuple[list[int], int, list[int]]:
    threshold = (2 * delta) // 3 + 1
    s = list(s_prime)
    trace = []
    k2 = 0
    while True:
        dist = bfs_distances(g, s)
        ring = [v for v, d in enumerate(dist) if d == 2]
        trace.append(len(ring))
        chosen = None
        for v in ring:
            inside = sum(1 for w in g.adj[v] if dist[w] == 2)
            if inside >= threshold:
                chosen = v
                break
        if chosen is None:
            return s, k2, trace
        _, y1, _ = descend(g, dist, chosen)
        s.extend((chosen, y1))
        k2 += 1


def procedure2(g: Graph, s_prime, delta: int) -> tuple[list[int], int]:
    """Absorb distance-2 vertices with more than 2*delta/3 neighbors at distance 2.

    The threshold is ``floor(2*delta/3) + 1`` so afterwards every distance-2
    vertex of a graph with min degree >= delta has >= ceil(delta/3)
    neighbors at distance 1.
    """
    s_prime = list(s_prime)
    if not s_prime:
        raise InvalidArgumentError("S' must be non-empty")
    dist = bfs_distances(g, s_prime)
    if min(dist) < 0 or max(dist) > 2:
        raise InvalidArgumentError("S' is not 2-step dominating")
    if not induced_is_connected(g, s_prime):
        raise InvalidArgumentError("S' does not induce a connected subgraph")
    s, k2, _ = _procedure2(g, s_prime, delta)
    return s, k2


def verify_strong_dominator(g: Graph, s, delta: int) -> list[Violation]:
    s = list(s)
    if not s:
        return [Violation("empty set")]
    violations = []
    if not induced_is_connected(g, s):
        violations.append(Violation("induced subgraph disconnected"))
    dist = bfs_distances(g, s)
    need = ceil_third(delta)
    for v, d in enumerate(dist):
        if d < 0 or d > 2:
            violations.append(Violation("not within distance 2", v))
        elif d == 2:
            near = sum(1 for w in g.adj[v] if dist[w] == 1)
            if near < need:
                violations.append(Violation(f"fewer than {need} dominated neighbors", v))
    return violations


def build_strong_dominator(g: Graph, delta: int, start: int = 0) -> DominatorReport:
    if delta < 2:
        raise InvalidArgumentError("delta must be at least 2")
    require_connected(g)
    if min_degree(g) < delta:
        raise InvalidArgumentError(f"min degree {min_degree(g)} is below delta={delta}")
    if not 0 <= start < g.n:
        raise InvalidArgumentError(f"start vertex {start} out of range")
    s_prime, k1, closed_trace = _procedure1(g, start)
    s, k2, fringe_trace = _procedure2(g, s_prime, delta)
    report = DominatorReport(
        s=tuple(s),
        k1=k1,
        k2=k2,
        layers=distance_layers(g, s),
        size_bound=dominator_size_bound(g.n, delta),
        strongness=ceil_third(delta),
        delta=delta,
        start=start,
        closed_trace=tuple(closed_trace),
        fringe_trace=tuple(fringe_trace),
    )
    problems = [str(v) for v in verify_strong_dominator(g, s, delta)]
    if len(set(s)) != len(s) or len(s) != 3 * k1 + 1 + 2 * k2:
        problems.append("size accounting")
    if not report.within_bound:
        problems.append(f"|S|={len(s)} exceeds {report.size_bound:.3f}")
    if problems:
        raise ContractError("; ".join(problems))
    return report
