"""Checking that a coloring is rainbow vertex-connected.

``is_rvc`` is an exact search for small graphs, ``structural_verify`` checks
a dominating-set coloring at any size by validating one certificate path per
pair, and ``exact_rvc`` computes the optimum of tiny graphs by enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import CertificateError, InvalidArgumentError
from .graph import Graph, bfs_distances, descend, induced_is_connected, require_connected
from .trees import tree_leaves

EXACT_MAX_ORDER = 8
DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    failing_pair: tuple[int, int] | None = None
    clause: str | None = None
    inconclusive: bool = False
    witness_paths: dict[tuple[int, int], list[int]] | None = field(default=None, compare=False, repr=False)

    @property
    def exit_code(self) -> int:
        if self.ok:
            return 0
        return 2 if self.inconclusive else 1


def _colors(coloring) -> Sequence[int]:
    return getattr(coloring, "colors", coloring)


def is_rainbow_path(g: Graph, colors: Sequence[int], path: Sequence[int]) -> bool:
    """Valid simple path whose internal vertices carry pairwise distinct colors."""
    if len(set(path)) != len(path):
        return False
    if any(b not in g.adj[a] for a, b in zip(path, path[1:])):
        return False
    inner = [colors[x] for x in path[1:-1]]
    return len(set(inner)) == len(inner)


class _BudgetExhausted(Exception):
    pass


def _rainbow_search(
    g: Graph, colors: Sequence[int], u: int, v: int, to_v: Sequence[int], budget: list[int]
) -> list[int] | None:
    # A state is (current vertex, colors used by internal vertices so far).
    # Visited internal vertices all carry used colors, so the state fully
    # determines the remaining search and failed states can be memoised.
    # Neighbors closer to v (distances ``to_v``) are tried first.
    failed: set[tuple[int, frozenset[int]]] = set()
    order = {}
    path = [u]

    def extend(x: int, used: frozenset[int]) -> bool:
        if (x, used) in failed:
            return False
        budget[0] -= 1
        if budget[0] < 0:
            raise _BudgetExhausted
        nbrs = order.get(x)
        if nbrs is None:
            nbrs = order[x] = sorted(g.adj[x], key=lambda w: (to_v[w], w))
        if v in g.adj[x]:
            path.append(v)
            return True
        for w in nbrs:
            if w == u or colors[w] in used:
                continue
            path.append(w)
            if extend(w, used | {colors[w]}):
                return True
            path.pop()
        failed.add((x, used))
        return False

    if extend(u, frozenset()):
        return path
    return None


def is_rvc(g: Graph, coloring, budget: int = DEFAULT_BUDGET, keep_paths: bool = False) -> VerificationResult:
    """Exact check over all pairs, lowest pair first.

    A shortest path is tried first; otherwise a depth-first search over
    simple paths prunes on repeated internal colors. ``budget`` caps the
    total number of search-node expansions; running out yields an
    inconclusive result rather than a verdict.
    """
    colors = _colors(coloring)
    if len(colors) != g.n:
        raise InvalidArgumentError("coloring must assign a color to every vertex")
    remaining = [budget]
    witnesses = {} if keep_paths else None
    dist_from: dict[int, list[int]] = {}
    for u in g.vertices():
        dist = bfs_distances(g, [u])
        for v in range(u + 1, g.n):
            if dist[v] < 0:
                return VerificationResult(False, (u, v), "disconnected")
            found = descend(g, dist, v)[::-1]
            if not is_rainbow_path(g, colors, found):
                to_v = dist_from.get(v)
                if to_v is None:
                    to_v = dist_from[v] = bfs_distances(g, [v])
                try:
                    found = _rainbow_search(g, colors, u, v, to_v, remaining)
                except _BudgetExhausted:
                    return VerificationResult(False, (u, v), "budget exhausted", inconclusive=True)
            if found is None:
                return VerificationResult(False, (u, v), "no rainbow path")
            if witnesses is not None:
                witnesses[(u, v)] = found
    return VerificationResult(True, witness_paths=witnesses)


def _exclusive_violation(colors: Sequence[int], owners: Sequence[int]) -> str | None:
    owner_colors = [colors[v] for v in owners]
    if len(set(owner_colors)) != len(owner_colors):
        return "S-injectivity"
    owned = set(owner_colors)
    owner_set = set(owners)
    for v, c in enumerate(colors):
        if c in owned and v not in owner_set:
            return "S-exclusivity"
    return None


def structural_verify(g: Graph, s, partition, coloring, keep_paths: bool = False) -> VerificationResult:
    """Check the proof obligations, then one certificate path per pair.

    Obligations: S induces a connected subgraph and 2-step dominates, S and
    the hubs (D1) carry exclusive colors, and every distance-2 vertex
    without a hub neighbor sees two colors among its fringe (D2)
    neighbors whenever it has two or more of them. Each pair's certificate
    is then checked edge by edge, so a fringe vertex with a single
    dominated neighbor is accepted only if its pairs route around it.
    """
    from .certificate import CertificateBuilder

    colors = _colors(coloring)
    s = list(s)
    hubs = frozenset(partition.d1) if partition is not None else frozenset()
    if not s or not induced_is_connected(g, s):
        return VerificationResult(False, clause="S-connectivity")
    dist = bfs_distances(g, s)
    far = [v for v, d in enumerate(dist) if d < 0 or d > 2]
    if far:
        return VerificationResult(False, (far[0], far[0]), "2-step domination")
    owners = sorted(set(s) | hubs)
    clause = _exclusive_violation(colors, owners)
    if clause:
        return VerificationResult(False, clause=clause)
    for v, d in enumerate(dist):
        if d != 2 or any(w in hubs for w in g.adj[v]):
            continue
        near = [w for w in g.adj[v] if dist[w] == 1 and w not in hubs]
        if len(near) >= 2 and len({colors[w] for w in near}) < 2:
            return VerificationResult(False, (v, v), "two-colors witness")

    builder = CertificateBuilder(g, s, colors, hubs)
    # Segments run inside S, whose colors were just shown exclusive, so a
    # segment is rainbow iff it is a simple path in S; checked once per
    # distinct segment. Side vertices lie outside S, and their colors can
    # only clash with each other.
    segment_ok: dict[tuple[int, int], bool] = {}
    s_set = set(s)
    adj = g.adj
    witnesses = {} if keep_paths else None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            try:
                direct, walk_u, walk_v = builder.endpoints(u, v)
            except CertificateError as exc:
                return VerificationResult(False, (u, v), exc.reason)
            if direct is not None:
                if not is_rainbow_path(g, colors, direct):
                    return VerificationResult(False, (u, v), "certificate")
                if witnesses is not None:
                    witnesses[(u, v)] = direct
                continue
            a, b = walk_u[-1], walk_v[-1]
            ok = segment_ok.get((a, b))
            if ok is None:
                seg = builder.s_path(a, b)
                ok = (
                    all(x in s_set for x in seg)
                    and len(set(seg)) == len(seg)
                    and all(y in adj[x] for x, y in zip(seg, seg[1:]))
                )
                segment_ok[(a, b)] = ok
            if not ok:
                return VerificationResult(False, (u, v), "certificate")
            # Walks u -> a and v -> b, each with at most one vertex outside S.
            for walk in (walk_u, walk_v):
                if any(y not in adj[x] for x, y in zip(walk, walk[1:])):
                    return VerificationResult(False, (u, v), "certificate")
            side = walk_u[1:-1] + walk_v[1:-1]
            if len(side) == 2 and (side[0] == side[1] or colors[side[0]] == colors[side[1]]):
                return VerificationResult(False, (u, v), "certificate")
            if u in walk_v[:-1] or v in walk_u[:-1] or any(x in s_set for x in side):
                return VerificationResult(False, (u, v), "certificate")
            if witnesses is not None:
                witnesses[(u, v)] = builder.path(u, v)
    return VerificationResult(True, witness_paths=witnesses)


def tree_verify(g: Graph, tree: Graph, coloring) -> VerificationResult:
    """A spanning tree of g whose internal vertices have distinct colors."""
    colors = _colors(coloring)
    if tree.n != g.n or tree.m != g.n - 1 or any(not g.has_edge(u, v) for u, v in tree.edges()):
        return VerificationResult(False, clause="not a spanning subgraph")
    if min(bfs_distances(tree, [0]), default=0) < 0:
        return VerificationResult(False, clause="tree disconnected")
    leaves = set(tree_leaves(tree))
    internal = [colors[v] for v in tree.vertices() if v not in leaves]
    if len(set(internal)) != len(internal):
        return VerificationResult(False, clause="internal-injectivity")
    return VerificationResult(True)


def set_partitions(n: int):
    """Restricted growth strings of length n: colorings up to renaming."""
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield list(rgs)
            return
        for c in range(top + 2):
            rgs[i] = c
            yield from rec(i + 1, max(top, c))

    rgs[0] = 0
    yield from rec(1, 0)


def exact_rvc(g: Graph) -> int:
    """Minimum number of colors making g rainbow vertex-connected (n <= 8)."""
    if g.n > EXACT_MAX_ORDER:
        raise InvalidArgumentError(
            f"exact_rvc enumerates colorings and is limited to n <= {EXACT_MAX_ORDER}; "
            "use is_rvc to spot-check a candidate coloring instead"
        )
    require_connected(g)
    if g.is_complete():
        return 0
    best: dict[int, list[int]] = {}
    for rgs in set_partitions(g.n):
        k = max(rgs) + 1
        best.setdefault(k, []).append(rgs)
    for k in sorted(best):
        for rgs in best[k]:
            result = is_rvc(g, rgs)
            if result.inconclusive:
                raise AssertionError("exact search ran out of budget")
            if result.ok:
                return k
    raise AssertionError("unreachable: the all-distinct coloring always works")

