"""Rainbow vertex-connected colorings.

Two dominating-set strategies:

* ``high``: when (delta+1)^2 >= n-1, S gets injective colors and N1 is
  colored from 7 shared colors so no N2 vertex sees a monochromatic witness
  set; at most |S| + 7 colors.
* ``split``: otherwise (delta >= 6, on a sparsified graph) N1 splits into
  hubs D1 with at least (delta+1)^2 neighbors in N2 and the rest D2. S and
  D1 get injective colors, D2 shares ceil(C(delta)) + 2 colors; at most
  |S| + |D1| + C(delta) + 2 colors, up to rounding of C(delta).

Two tree strategies (``tree``, ``maxdeg``) color the internal vertices of a
spanning tree. :func:`auto_color` runs the applicable ones and keeps the
fewest colors.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace

from .bounds import (
    HIGH_PALETTE,
    Regime,
    ceil_third,
    fringe_constant,
    is_high,
    split_palette,
    theorem_bound,
)
from .dominator import DominatorReport, build_strong_dominator
from .errors import ContractError, InvalidArgumentError, ResampleCapExceeded, StrategyInapplicable
from .graph import Graph, distance_layers, min_degree, require_connected
from .resample import as_rng, resample_until_distinct
from .sparsify import SparsifyReport, sparsify
from .trees import max_degree_tree, max_leaf_spanning_tree, tree_coloring
from .verify import VerificationResult, structural_verify, tree_verify

log = logging.getLogger(__name__)

STRATEGIES = ("high", "split", "tree", "maxdeg")
MAX_ESCALATIONS = 256


@dataclass(frozen=True)
class VertexColoring:
    colors: tuple[int, ...]

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]


@dataclass(frozen=True)
class InterfacePartition:
    d1: frozenset[int]
    d2: frozenset[int]
    l1: frozenset[int]
    l2: frozenset[int]
    d1_limit: float

    @property
    def d1_within_limit(self) -> bool:
        return len(self.d1) <= self.d1_limit


@dataclass(frozen=True)
class ColoringReport:
    strategy: str
    regime: Regime
    coloring: VertexColoring
    colors_used: int
    bound_value: float
    bound_met: bool
    verified: bool
    s_size: int = 0
    d1_size: int = 0
    fringe_palette: int = 0
    resample_count: int = 0
    escalations: int = 0
    accounting_bound: float | None = None
    verification: VerificationResult | None = field(default=None, compare=False, repr=False)
    graph: Graph | None = field(default=None, compare=False, repr=False)
    dominator: DominatorReport | None = field(default=None, compare=False, repr=False)
    partition: InterfacePartition | None = field(default=None, compare=False, repr=False)
    tree: Graph | None = field(default=None, compare=False, repr=False)
    sparsified: SparsifyReport | None = field(default=None, compare=False, repr=False)
    alternatives: tuple[tuple[str, str], ...] = ()


def partition_interface(g: Graph, s, delta: int) -> InterfacePartition:
    layers = distance_layers(g, s)
    if min(layers.index) < 0 or layers.depth > 2:
        raise InvalidArgumentError("S is not 2-step dominating")
    dist = layers.index
    hub_degree = (delta + 1) ** 2
    d1 = frozenset(v for v in layers.layer(1) if sum(1 for w in g.adj[v] if dist[w] == 2) >= hub_degree)
    d2 = layers.layer(1) - d1
    l1 = frozenset(v for v in layers.layer(2) if not g.adj[v].isdisjoint(d1))
    l2 = layers.layer(2) - l1
    part = InterfacePartition(d1, d2, l1, l2, g.n / (delta + 1))
    if not part.d1_within_limit:
        log.warning("|D1|=%d exceeds n/(delta+1)=%.2f", len(d1), part.d1_limit)
    return part


def _regime(g: Graph, delta: int) -> Regime:
    if g.is_complete():
        return Regime("Complete", True, 0.0)
    return theorem_bound(g.n, delta)


def _complete_report(g: Graph, strategy: str) -> ColoringReport:
    return ColoringReport(
        strategy=strategy,
        regime=Regime("Complete", True, 0.0),
        coloring=VertexColoring((0,) * g.n),
        colors_used=0,
        bound_value=0.0,
        bound_met=True,
        verified=True,
        verification=VerificationResult(True),
        graph=g,
    )


def _resolve_delta(g: Graph, delta: int | None) -> int:
    low = min_degree(g)
    if delta is None:
        return low
    if delta > low:
        raise InvalidArgumentError(f"delta={delta} exceeds the minimum degree {low}")
    return delta


def _dominator(g: Graph, s, delta: int) -> tuple[list[int], DominatorReport | None]:
    if s is None:
        report = build_strong_dominator(g, delta)
        return list(report.s), report
    if isinstance(s, DominatorReport):
        return list(s.s), s
    return list(s), None


def _resample_with_escalation(targets, palette: int, rng):
    escalations = 0
    total = 0
    while True:
        try:
            assignment, count = resample_until_distinct(targets, palette, rng)
            return assignment, total + count, escalations, palette
        except ResampleCapExceeded as exc:
            total += exc.resamples
            escalations += 1
            palette += 1
            log.info("resampling capped; escalating fringe palette to %d", palette)
            if escalations > MAX_ESCALATIONS:
                raise ContractError("palette escalation did not terminate") from exc


def _finish(strategy, g, delta, colors, verify, verifier, **extra) -> ColoringReport:
    coloring = VertexColoring(tuple(colors))
    regime = _regime(g, delta)
    used = coloring.palette_size
    verification = verifier(coloring) if verify else None
    return ColoringReport(
        strategy=strategy,
        regime=regime,
        coloring=coloring,
        colors_used=used,
        bound_value=regime.bound_value,
        bound_met=used <= regime.bound_value,
        verified=bool(verification and verification.ok),
        verification=verification,
        graph=g,
        **extra,
    )


def color_high_regime(g: Graph, s=None, delta: int | None = None, seed=0, verify: bool = True) -> ColoringReport:
    require_connected(g)
    if g.is_complete():
        return _complete_report(g, "high")
    delta = _resolve_delta(g, delta)
    if delta < 2:
        raise StrategyInapplicable("the dominating-set strategies need delta >= 2")
    if not is_high(g.n, delta):
        raise StrategyInapplicable(f"(delta+1)^2 = {(delta + 1) ** 2} < n-1 = {g.n - 1}")
    s_list, dom = _dominator(g, s, delta)
    partition = partition_interface(g, s_list, delta)
    dist = distance_layers(g, s_list).index
    size = max(2, ceil_third(delta))
    targets = []
    for u in sorted(partition.l1 | partition.l2):
        near = [w for w in g.neighbors(u) if dist[w] == 1][:size]
        # A lone dominated neighbor cannot be made two-colored; such
        # vertices are left to the per-pair certificates.
        if len(near) >= 2:
            targets.append((u, near))
    rng = as_rng(seed)
    assignment, resamples, escalations, palette = _resample_with_escalation(targets, HIGH_PALETTE, rng)
    colors = [0] * g.n
    for v, c in assignment.items():
        colors[v] = c
    for i, v in enumerate(s_list):
        colors[v] = palette + i
    return _finish(
        "high",
        g,
        delta,
        colors,
        verify,
        lambda col: structural_verify(g, s_list, partition, col),
        s_size=len(s_list),
        d1_size=len(partition.d1),
        fringe_palette=palette,
        resample_count=resamples,
        escalations=escalations,
        accounting_bound=len(s_list) + HIGH_PALETTE,
        dominator=dom,
        partition=partition,
    )


def color_split_regime(g: Graph, s=None, delta: int | None = None, seed=0, verify: bool = True) -> ColoringReport:
    """Split-regime coloring of ``g``; callers are expected to sparsify first."""
    require_connected(g)
    if g.is_complete():
        return _complete_report(g, "split")
    delta = _resolve_delta(g, delta)
    if delta < 6:
        raise StrategyInapplicable("the split strategy needs delta >= 6")
    s_list, dom = _dominator(g, s, delta)
    partition = partition_interface(g, s_list, delta)
    size = ceil_third(delta)
    targets = []
    for u in sorted(partition.l2):
        near = [w for w in g.neighbors(u) if w in partition.d2][:size]
        if len(near) < size:
            raise ContractError(f"vertex {u} has {len(near)} fringe neighbors, needs {size}")
        targets.append((u, near))
    rng = as_rng(seed)
    assignment, resamples, escalations, palette = _resample_with_escalation(targets, split_palette(delta), rng)
    colors = [0] * g.n
    for v, c in assignment.items():
        colors[v] = c
    owners = s_list + sorted(partition.d1)
    for i, v in enumerate(owners):
        colors[v] = palette + i
    return _finish(
        "split",
        g,
        delta,
        colors,
        verify,
        lambda col: structural_verify(g, s_list, partition, col),
        s_size=len(s_list),
        d1_size=len(partition.d1),
        fringe_palette=palette,
        resample_count=resamples,
        escalations=escalations,
        accounting_bound=len(s_list) + len(partition.d1) + fringe_constant(delta) + 2,
        dominator=dom,
        partition=partition,
    )


def color_via_tree(g: Graph, t: Graph) -> VertexColoring:
    if t.n != g.n or t.m != g.n - 1 or any(not g.has_edge(u, v) for u, v in t.edges()):
        raise InvalidArgumentError("t is not a spanning tree of g")
    return VertexColoring(tuple(tree_coloring(t)))


def color_via_max_degree(g: Graph) -> VertexColoring:
    require_connected(g)
    return color_via_tree(g, max_degree_tree(g))


def _tree_report(strategy: str, g: Graph, t: Graph, delta: int, verify: bool) -> ColoringReport:
    colors = color_via_tree(g, t).colors
    if g.is_complete():
        return _complete_report(g, strategy)
    return _finish(strategy, g, delta, colors, verify, lambda col: tree_verify(g, t, col), tree=t)


def color_tree_strategy(g: Graph, delta: int | None = None, seed=0, verify: bool = True) -> ColoringReport:
    require_connected(g)
    delta = _resolve_delta(g, delta)
    return _tree_report("tree", g, max_leaf_spanning_tree(g, seed), delta, verify)


def color_maxdeg_strategy(g: Graph, delta: int | None = None, seed=0, verify: bool = True) -> ColoringReport:
    require_connected(g)
    delta = _resolve_delta(g, delta)
    return _tree_report("maxdeg", g, max_degree_tree(g), delta, verify)


def run_strategy(g: Graph, strategy: str, delta: int | None = None, seed=0, verify: bool = True) -> ColoringReport:
    """Run one named strategy as a full pipeline (``split`` sparsifies first)."""
    if strategy == "auto":
        return auto_color(g, delta, seed, verify)
    if strategy not in STRATEGIES:
        raise InvalidArgumentError(f"unknown strategy {strategy!r}")
    require_connected(g)
    delta = _resolve_delta(g, delta)
    if strategy == "high":
        return color_high_regime(g, None, delta, seed, verify)
    if strategy == "split":
        if g.is_complete():
            return _complete_report(g, "split")
        if delta < 6:
            raise StrategyInapplicable("the split strategy needs delta >= 6")
        report = sparsify(g, delta)
        colored = color_split_regime(report.result, None, delta, seed, verify)
        return replace(colored, sparsified=report)
    if strategy == "tree":
        return color_tree_strategy(g, delta, seed, verify)
    return color_maxdeg_strategy(g, delta, seed, verify)


def auto_color(g: Graph, delta: int | None = None, seed=0, verify: bool = True) -> ColoringReport:
    """Race the applicable strategies and keep the verified one with fewest colors.

    The dominating-set contender is ``high`` when (delta+1)^2 >= n-1 and
    ``split`` otherwise; the tree strategies always run. Strategy ``i``
    draws from seed ``seed ^ i``. Ties go to the earlier strategy.
    """
    require_connected(g)
    if g.is_complete():
        return _complete_report(g, "auto")
    delta = _resolve_delta(g, delta)
    contenders = ["high" if is_high(g.n, delta) else "split", "tree", "maxdeg"]
    best = None
    summary = []
    for name in contenders:
        try:
            report = run_strategy(g, name, delta, seed ^ STRATEGIES.index(name), verify)
        except StrategyInapplicable as exc:
            summary.append((name, f"inapplicable: {exc}"))
            continue
        summary.append((name, str(report.colors_used)))
        if verify and not report.verified:
            continue
        if best is None or report.colors_used < best.colors_used:
            best = report
    if best is None:
        raise ContractError("no strategy produced a verified coloring")
    return replace(best, alternatives=tuple(summary))
