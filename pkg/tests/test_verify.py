import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import connected_graphs, to_nx
from rvcolor.colorizer import color_high_regime, partition_interface
from rvcolor.errors import InvalidArgumentError
from rvcolor.generators import caro_chain, complete, cycle, path, petersen, star
from rvcolor.graph import Graph, bfs_distances, distance_layers
from rvcolor.trees import bfs_tree
from rvcolor.verify import (
    exact_rvc,
    is_rainbow_path,
    is_rvc,
    set_partitions,
    structural_verify,
    tree_verify,
)


def test_is_rainbow_path():
    g = path(4)
    assert is_rainbow_path(g, [5, 0, 1, 5], [0, 1, 2, 3])
    assert not is_rainbow_path(g, [5, 0, 0, 5], [0, 1, 2, 3])
    assert not is_rainbow_path(g, [0, 1, 2, 3], [0, 2])
    assert not is_rainbow_path(cycle(4), [0, 1, 2, 3], [0, 1, 0])


def test_is_rvc_examples():
    assert is_rvc(path(4), [0, 0, 1, 0]).ok
    r = is_rvc(path(4), [0, 0, 0, 0])
    assert not r.ok and r.failing_pair == (0, 3) and r.exit_code == 1
    assert is_rvc(petersen(), [0] * 10).ok
    assert is_rvc(complete(4), [0] * 4).ok


def test_is_rvc_witnesses():
    r = is_rvc(cycle(6), [0, 1, 0, 1, 0, 1], keep_paths=True)
    assert r.ok
    for (u, v), p in r.witness_paths.items():
        assert p[0] == u and p[-1] == v
        assert is_rainbow_path(cycle(6), [0, 1, 0, 1, 0, 1], p)


def test_is_rvc_budget_is_inconclusive():
    # pair (0, 3) of C6 needs the search: the short path 0-1-2-3 repeats color 0
    colors = [0, 0, 0, 1, 1, 1]
    assert not is_rainbow_path(cycle(6), colors, [0, 1, 2, 3])
    r = is_rvc(cycle(6), colors, budget=0)
    assert r.inconclusive and r.exit_code == 2


def test_is_rvc_requires_total_coloring():
    with pytest.raises(InvalidArgumentError):
        is_rvc(path(4), [0, 0])


def _brute_force(g: Graph, colors) -> bool:
    h = to_nx(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not any(is_rainbow_path(g, colors, p) for p in nx.all_simple_paths(h, u, v)):
                return False
    return True


@settings(max_examples=200, deadline=None)
@given(connected_graphs(min_n=2, max_n=7), st.data())
def test_is_rvc_matches_path_enumeration(g, data):
    colors = data.draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n))
    assert is_rvc(g, colors).ok == _brute_force(g, colors)


@settings(max_examples=150, deadline=None)
@given(connected_graphs(min_n=2, max_n=9), st.data())
def test_refining_a_coloring_preserves_rvc(g, data):
    colors = data.draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n))
    split = data.draw(st.lists(st.integers(0, 1), min_size=g.n, max_size=g.n))
    finer = [2 * c + s for c, s in zip(colors, split)]
    if is_rvc(g, colors).ok:
        assert is_rvc(g, finer).ok


@pytest.mark.parametrize(
    "g,expected",
    [(complete(4), 0), (path(5), 3), (cycle(6), 2), (cycle(5), 1), (star(4), 1), (path(2), 0)],
)
def test_exact_examples(g, expected):
    assert exact_rvc(g) == expected


def test_exact_refuses_large_graphs():
    with pytest.raises(InvalidArgumentError, match="is_rvc"):
        exact_rvc(petersen())


def test_set_partitions_are_bell_numbers():
    assert [sum(1 for _ in set_partitions(n)) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_n=2, max_n=6))
def test_exact_sandwich(g):
    k = exact_rvc(g)
    d = nx.diameter(to_nx(g))
    assert k >= d - 1
    if not g.is_complete():
        assert k <= g.n - 2


def test_tree_verify():
    g = cycle(6)
    t = bfs_tree(g, 0)
    assert tree_verify(g, t, [0, 1, 2, 3, 4, 5]).ok
    assert tree_verify(g, t, [0] * 6).clause == "internal-injectivity"
    assert not tree_verify(g, star(5), [0] * 6).ok


def _high(g):
    report = color_high_regime(g, seed=0)
    assert report.verified
    return report, list(report.coloring.colors)


def test_structural_accepts_pipeline_output():
    report, colors = _high(caro_chain(3, 1))
    r = structural_verify(report.graph, report.dominator.s, report.partition, colors, keep_paths=True)
    assert r.ok
    g = report.graph
    dist = bfs_distances(g, [0])
    u, v = 0, dist.index(max(dist))
    assert dist[v] == 8
    p = r.witness_paths[(u, v)]
    assert len(p) - 1 >= 8 and is_rainbow_path(g, colors, p)


def test_forced_s_injectivity_violation():
    report, colors = _high(caro_chain(3, 1))
    a, b = report.dominator.s[:2]
    colors[b] = colors[a]
    r = structural_verify(report.graph, report.dominator.s, report.partition, colors)
    assert not r.ok and r.clause == "S-injectivity"


def test_forced_exclusivity_violation():
    report, colors = _high(caro_chain(3, 1))
    s = set(report.dominator.s)
    outsider = next(v for v in range(report.graph.n) if v not in s)
    colors[outsider] = colors[report.dominator.s[0]]
    r = structural_verify(report.graph, report.dominator.s, report.partition, colors)
    assert r.clause == "S-exclusivity"


def test_forced_two_colors_violation():
    g = caro_chain(4, 2)
    report, colors = _high(g)
    s = report.dominator.s
    dist = distance_layers(g, s).index
    target = next(v for v in range(g.n) if dist[v] == 2 and sum(dist[w] == 1 for w in g.adj[v]) >= 2)
    for w in g.adj[target]:
        if dist[w] == 1:
            colors[w] = 0
    r = structural_verify(g, s, partition_interface(g, s, 4), colors)
    assert not r.ok and r.clause == "two-colors witness"


def test_structural_rejects_bad_sets():
    g = cycle(12)
    assert structural_verify(g, [0, 6], None, [0] * 12).clause == "S-connectivity"
    assert structural_verify(g, [0], None, [0] * 12).clause == "2-step domination"
