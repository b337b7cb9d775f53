"""Greedy edge deletion down to a sparse connected spanning subgraph."""
from __future__ import annotations

import logging
from dataclasses import dataclass

from .bounds import edge_budget
from .errors import InvalidArgumentError
from .graph import Graph, min_degree, require_connected

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SparsifyReport:
    result: Graph
    edges_before: int
    edges_after: int
    edge_budget: float
    within_budget: bool


def _still_connected(adj: list[set[int]], u: int, v: int) -> bool:
    """Is ``v`` reachable from ``u``? The edge ``uv`` must already be removed.

    Bidirectional search, always growing the smaller frontier, so the usual
    case of a short detour costs a few neighborhoods instead of a full BFS.
    """
    seen_u, seen_v = {u}, {v}
    front_u, front_v = [u], [v]
    while front_u and front_v:
        if len(front_u) > len(front_v):
            front_u, front_v = front_v, front_u
            seen_u, seen_v = seen_v, seen_u
        nxt = []
        for x in front_u:
            for w in adj[x]:
                if w in seen_v:
                    return True
                if w not in seen_u:
                    seen_u.add(w)
                    nxt.append(w)
        front_u = nxt
    return False


def sparsify(g: Graph, delta: int) -> SparsifyReport:
    """Drop edges in lexicographic order while both endpoints keep degree > delta
    and the graph stays connected; repeat until a full pass removes nothing."""
    require_connected(g)
    if delta < 1:
        raise InvalidArgumentError("delta must be at least 1")
    if min_degree(g) < delta:
        raise InvalidArgumentError(f"min degree {min_degree(g)} is below delta={delta}")
    adj = [set(nbrs) for nbrs in g.adj]
    changed = True
    while changed:
        changed = False
        for u, v in g.edges():
            if v not in adj[u] or len(adj[u]) <= delta or len(adj[v]) <= delta:
                continue
            adj[u].discard(v)
            adj[v].discard(u)
            if _still_connected(adj, u, v):
                changed = True
            else:
                adj[u].add(v)
                adj[v].add(u)
    result = Graph(g.n, adj)
    budget = edge_budget(g.n, delta)
    report = SparsifyReport(result, g.m, result.m, budget, result.m < budget)
    if not report.within_budget:
        log.warning("sparsified graph keeps %d edges, budget is %.2f", result.m, budget)
    return report
