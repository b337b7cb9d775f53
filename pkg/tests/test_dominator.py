import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures import absorption_fixture, hub_fixture
from rvcolor.bounds import ceil_third
from rvcolor.dominator import build_strong_dominator, procedure1, procedure2, verify_strong_dominator
from rvcolor.errors import InvalidArgumentError
from rvcolor.generators import caro_chain, complete, cycle, petersen, random_min_degree
from rvcolor.graph import bfs_distances, induced_is_connected, min_degree


def test_procedure1_examples():
    assert procedure1(complete(5), 0) == ([0], 0)
    s, k1 = procedure1(cycle(12), 0)
    assert k1 == 3 and len(s) == 10
    # absorbs v3, v6, v9 with their path vertices
    assert s == [0, 3, 1, 2, 6, 4, 5, 9, 7, 8]
    assert procedure1(petersen(), 4) == ([4], 0)


def test_procedure2_examples():
    s, _ = procedure1(cycle(12), 0)
    assert procedure2(cycle(12), s, 2) == (s, 0)
    assert procedure2(complete(5), [0], 4) == ([0], 0)


def test_procedure2_single_absorption():
    g = absorption_fixture()
    assert min_degree(g) == 6
    s_prime, k1 = procedure1(g, 0)
    assert (s_prime, k1) == ([0], 0)
    s, k2 = procedure2(g, s_prime, 6)
    assert k2 == 1 and s == [0, 7, 6]
    assert verify_strong_dominator(g, s, 6) == []


def test_procedure2_precondition():
    with pytest.raises(InvalidArgumentError):
        procedure2(cycle(12), [0], 2)
    with pytest.raises(InvalidArgumentError):
        procedure2(cycle(6), [0, 3], 2)


def test_build_examples():
    r = build_strong_dominator(cycle(12), 2, 0)
    assert r.size == 10 == r.size_bound
    assert (r.k1, r.k2) == (3, 0)
    r = build_strong_dominator(complete(5), 4)
    assert r.size == 1 == r.size_bound
    r = build_strong_dominator(caro_chain(3, 1), 3)
    assert r.size <= 8
    assert r.size == 7


def test_build_rejects_bad_arguments():
    with pytest.raises(InvalidArgumentError):
        build_strong_dominator(cycle(6), 1)
    with pytest.raises(InvalidArgumentError):
        build_strong_dominator(cycle(6), 3)
    with pytest.raises(InvalidArgumentError):
        build_strong_dominator(cycle(6), 2, start=9)


def test_verify_examples():
    assert verify_strong_dominator(cycle(12), [0], 2)
    clauses = [v.clause for v in verify_strong_dominator(cycle(6), [0, 3], 2)]
    assert "induced subgraph disconnected" in clauses
    assert verify_strong_dominator(cycle(6), [], 2)


def test_hub_fixture_needs_no_absorption():
    g = hub_fixture()
    r = build_strong_dominator(g, 6)
    assert r.s == (0,) and r.k2 == 0


def _check_report(g, delta, r):
    assert verify_strong_dominator(g, r.s, delta) == []
    assert len(r.s) <= 3 * g.n / (delta + 1) - 2
    assert len(r.s) == 3 * r.k1 + 1 + 2 * r.k2 == len(set(r.s))
    assert induced_is_connected(g, r.s)
    dist = bfs_distances(g, r.s)
    assert max(dist) <= 2
    need = ceil_third(delta)
    for v, d in enumerate(dist):
        if d == 2:
            assert sum(1 for w in g.adj[v] if dist[w] == 1) >= need
    # each Procedure-1 round claims a whole closed neighborhood
    steps = list(zip(r.closed_trace, r.closed_trace[1:]))
    assert len(steps) == r.k1
    assert all(b - a >= delta + 1 for a, b in steps)
    # k1 + 1 <= |S' u N1(S')| / (delta + 1), and S' u N1(S') misses exactly N2(S')
    assert (r.k1 + 1) * (delta + 1) <= g.n - r.fringe_trace[0]
    # each Procedure-2 round removes the chosen vertex and its fringe neighbors
    drops = [a - b for a, b in zip(r.fringe_trace, r.fringe_trace[1:])]
    assert len(drops) == r.k2
    assert all(d >= (2 * delta) // 3 + 2 for d in drops)


@settings(max_examples=60, deadline=None)
@given(st.integers(10, 120), st.integers(2, 14), st.integers(0, 10_000), st.data())
def test_dominator_invariants(n, delta, seed, data):
    delta = min(delta, n - 1)
    g = random_min_degree(n, delta, seed)
    start = data.draw(st.integers(0, n - 1))
    _check_report(g, delta, build_strong_dominator(g, delta, start))


@pytest.mark.parametrize("delta", range(3, 9))
@pytest.mark.parametrize("m", range(0, 6))
def test_dominator_on_clique_chains(delta, m):
    g = caro_chain(delta, m)
    for start in (0, g.n // 2, g.n - 1):
        _check_report(g, delta, build_strong_dominator(g, delta, start))


def test_smaller_delta_than_min_degree_is_allowed():
    g = random_min_degree(60, 8, 2)
    _check_report(g, 4, build_strong_dominator(g, 4))
