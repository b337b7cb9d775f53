"""Graph families: the clique chain showing the main bound is nearly tight,
seeded random graphs of prescribed minimum degree, and small classics."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidArgumentError
from .graph import Graph


@dataclass(frozen=True)
class CaroChainSpec:
    delta: int
    m: int

    @property
    def n(self) -> int:
        return (self.m + 2) * (self.delta + 1) + 2

    def block_sizes(self) -> list[int]:
        return [self.delta + 2] + [self.delta + 1] * self.m + [self.delta + 2]

    def expected_diameter(self) -> int:
        numerator = 3 * self.n - self.delta - 7
        assert numerator % (self.delta + 1) == 0
        return numerator // (self.delta + 1)


def caro_chain(delta: int, m: int) -> Graph:
    """Chain of cliques X_0..X_{m+1}.

    The two end blocks are K_{delta+2}, the m inner blocks K_{delta+1}.
    Vertex ``x_{i,j}`` gets id ``offset_i + j - 1``. Every block loses the
    edge ``x_{i,1} x_{i,2}``, and ``x_{i,2}`` is bridged to ``x_{i+1,1}``.
    """
    if delta < 3:
        raise InvalidArgumentError("caro_chain needs delta >= 3")
    if m < 0:
        raise InvalidArgumentError("caro_chain needs m >= 0")
    layout = CaroChainSpec(delta, m)
    offsets = []
    edges = []
    start = 0
    for size in layout.block_sizes():
        offsets.append(start)
        block = range(start, start + size)
        edges.extend((u, v) for u, v in combinations(block, 2) if (u, v) != (start, start + 1))
        start += size
    for i in range(m + 1):
        edges.append((offsets[i] + 1, offsets[i + 1]))
    return Graph.from_edges(layout.n, edges)


def random_min_degree(n: int, delta: int, seed: int) -> Graph:
    """Random connected graph with minimum degree exactly ``delta``.

    Starts from a random Hamiltonian cycle, then visits vertices in id order
    and joins each deficient one to uniformly random non-neighbors until it
    reaches ``delta``.
    """
    if delta < 2:
        raise InvalidArgumentError("random_min_degree needs delta >= 2")
    if delta >= n:
        raise InvalidArgumentError(f"min degree {delta} infeasible on {n} vertices")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    adj: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        u, v = order[i], order[(i + 1) % n]
        adj[u].add(v)
        adj[v].add(u)
    for u in range(n):
        missing = delta - len(adj[u])
        if missing <= 0:
            continue
        candidates = [w for w in range(n) if w != u and w not in adj[u]]
        for w in rng.sample(candidates, missing):
            adj[u].add(w)
            adj[w].add(u)
    return Graph(n, adj)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidArgumentError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the center at id 0."""
    return complete_bipartite(1, leaves)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


CLASSICS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "petersen": petersen,
}


def classic(name: str, *params: int) -> Graph:
    try:
        build = CLASSICS[name]
    except KeyError:
        raise InvalidArgumentError(f"unknown classic graph {name!r}; choose from {sorted(CLASSICS)}") from None
    try:
        return build(*params)
    except TypeError as exc:
        raise InvalidArgumentError(f"bad parameters for {name}: {exc}") from None


@dataclass(frozen=True)
class CorpusEntry:
    family: str
    label: str
    delta: int
    graph: Graph
    seed: int = 0


def random_corpus(count: int = 200, n_range=(20, 300), delta_range=(2, 20), base_seed: int = 0) -> list[CorpusEntry]:
    """Seeded sample of ``random_min_degree`` graphs; entry ``i`` uses seed ``base_seed + i``."""
    entries = []
    for i in range(count):
        seed = base_seed + i
        rng = random.Random(seed)
        n = rng.randint(*n_range)
        delta = rng.randint(delta_range[0], min(delta_range[1], n - 1))
        g = random_min_degree(n, delta, seed)
        entries.append(CorpusEntry("random", f"random(n={n},delta={delta},seed={seed})", delta, g, seed))
    return entries


def caro_corpus(deltas=range(3, 9), ms=range(0, 6)) -> list[CorpusEntry]:
    return [
        CorpusEntry("caro", f"caro(delta={d},m={m})", d, caro_chain(d, m))
        for d in deltas
        for m in ms
    ]
